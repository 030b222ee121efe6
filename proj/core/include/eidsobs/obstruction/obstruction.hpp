#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eidsobs/eids/descriptor.hpp"
#include "eidsobs/groebner/standard_basis.hpp"
#include "eidsobs/invariants/report.hpp"

namespace eidsobs {

/// Reduced Euler characteristic of the generic link of M^t_{m,n}:
/// (-1)^t C(m-1, t-1). Requires 1 <= t <= m <= n, else OutOfRange.
long long chi_bar_generic_link(std::size_t m, std::size_t n, std::size_t t);

/// Euler characteristic of the complex link of the stratum V_i of X,
/// 1 + chi_bar of the normal type (m-i+1, n-i+1, t-i+1). 1 <= i <= t-1.
long long complex_link_chi(const EidsDescriptor& x, std::size_t i);

/// One term of the Lefschetz sum over strata.
struct StratumDatum {
  std::size_t index = 0;
  long long chi_slice = 0;       // chi(V_i ∩ l^{-1}(t0) ∩ B)
  long long eu_on_stratum = 1;   // Eu_{V_i}(X); 1 on the regular part
  Provenance chi_provenance;
  Provenance eu_provenance;
};

/// Sum of chi_slice * eu_on_stratum.
long long lefschetz_combine(const std::vector<StratumDatum>& strata);

/// 1 + (-1)^d nu + (-1)^(d+1) m_d.
long long eu_smoothable(int d, long long nu, long long md);
/// chi_tilde of the generic slice plus one.
long long eu_n_equals_6(long long chi_tilde_slice);
/// (-1)^(N-7) mu(Sigma X ∩ H) + chi_tilde(X ∩ H) + 2. RegimeMismatch for N < 7.
long long eu_n_ge_7(std::size_t N, long long mu_sigma_slice, long long chi_tilde_slice);
/// (-1)^(N-1) mu(g) for a corank-one germ with residual function g.
/// RegimeMismatch for N < 6.
long long chi_tilde_corank1(std::size_t N, long long mu_g);
/// ((-1)^dim mu(Sigma X ∩ H) + 1)(chi(L_{V_1}) - 1) + chi_tilde(X ∩ H) + 1.
long long eu_three_strata(int sigma_slice_dim, long long mu_sigma_slice, long long chi_link,
                          long long chi_tilde_slice);

enum class Regime { Smoothable, NEquals6, NGe7Type232, Corank1FastPath, GeneralThreeStrata };

std::string_view to_string(Regime regime);
/// Throws InvalidArgument on an unknown name.
Regime regime_from_string(std::string_view text);

/// Values the caller provides because the pipeline cannot compute them.
/// Subjects in use: "X", "slice", "sigma_slice".
struct SuppliedInputs {
  std::vector<InvariantReport> reports;
  /// Use a supplied value without attempting the computation first.
  bool prefer = false;

  void add(InvariantName name, std::string subject, long long value,
           Provenance provenance = Provenance::supplied());
  const InvariantReport* find(InvariantName name, std::string_view subject) const;
};

struct EuResult {
  long long value = 0;
  Regime regime = Regime::Smoothable;
  std::vector<InvariantReport> inputs;  // every value the formula consumed
  std::uint64_t seed = 0;
  std::vector<std::string> derivation;  // human-readable steps
};

/// Milnor number of the residual function g of a corank-one (2,3,2) germ
/// with F(0) = 0: the critical locus of phi∘F on the smooth germ cut out by
/// five entries with independent linear parts, phi vanishing on dF(0).
/// RegimeMismatch when the germ is not of that shape or g is not isolated.
std::uint64_t residual_milnor(const EidsDescriptor& x, const Limits& limits = {});

/// Preconditions of the corank-one fast path: (2,3,2) up to transpose,
/// N >= 7, F(0) = 0 and corank one.
bool corank1_applicable(const EidsDescriptor& x);

long long eu_corank1_fastpath(const EidsDescriptor& x, std::uint64_t seed, const Limits& limits = {});

/// Evaluates Eu_0(X) in the given regime, re-checking its preconditions
/// (RegimeMismatch otherwise).
EuResult eu_for_regime(const EidsDescriptor& x, Regime regime, std::uint64_t seed,
                       const SuppliedInputs& supplied = {}, const Limits& limits = {});

/// Picks the first applicable regime in the order Corank1FastPath,
/// Smoothable, NEquals6, NGe7Type232, GeneralThreeStrata.
EuResult eu_dispatch(const EidsDescriptor& x, std::uint64_t seed, const SuppliedInputs& supplied = {},
                     const Limits& limits = {});

/// Regimes whose preconditions hold, in dispatch order.
std::vector<Regime> applicable_regimes(const EidsDescriptor& x);

}  // namespace eidsobs

#pragma once

#include <cstdint>
#include <vector>

#include "eidsobs/eids/descriptor.hpp"
#include "eidsobs/groebner/standard_basis.hpp"
#include "eidsobs/invariants/report.hpp"
#include "eidsobs/poly/generic.hpp"

namespace eidsobs {

/// Bound on seed retries for every generic choice.
inline constexpr unsigned kGenericRetries = 8;

/// Colength of the Jacobian ideal in the local ring. Throws NotAGerm when
/// g(0) != 0 and NonIsolated when the colength is infinite.
std::uint64_t milnor_hypersurface(const Polynomial& g, const Limits& limits = {});
/// Colength of (g) + Jacobian ideal in the local ring.
std::uint64_t tjurina_hypersurface(const Polynomial& g, const Limits& limits = {});
/// prod (1/w_i - 1); throws NonIntegerResult unless a non-negative integer.
std::uint64_t milnor_orlik_oracle(const std::vector<Rational>& weights);

/// A complete intersection V(equations) claimed to have codimension
/// `codim` and an isolated singularity at the origin.
struct IcisPresentation {
  VarContext context;
  std::vector<Polynomial> equations;
  std::size_t codim;
};

/// Throws NotICIS unless the equations have the claimed local codimension
/// and the singular locus is isolated.
void verify_icis(const IcisPresentation& x, const Limits& limits = {});

/// Milnor number by descending induction over generic hyperplane slices:
/// mu(X) + mu(X ∩ H) = colength(f, (k+1)-minors of the Jacobian of (f, l)).
std::uint64_t milnor_icis(const IcisPresentation& x, std::uint64_t seed, const Limits& limits = {});

/// Colength of I plus d seeded generic linear forms in the local ring.
std::uint64_t multiplicity_m0(const Ideal& ideal, int d, std::uint64_t seed, const Limits& limits = {});

/// Polar multiplicity m_d(X, p) of a smoothable IDS for the family
/// F + s*C: the number of critical points of p on a nearby smooth fiber,
/// read off the polar curve as its multiplicity along the s-axis.
struct PolarResult {
  std::uint64_t value;
  std::uint64_t seed;  // seed of the deformation matrix actually used
};
PolarResult polar_multiplicity_md(const EidsDescriptor& x, const LinearForm& p, std::uint64_t seed,
                                  const Limits& limits = {});

/// One level of the vanishing Euler characteristic recursion.
struct NuStep {
  int dimension;
  long long md;           // polar multiplicity at this level (m0 at d = 0)
  std::uint64_t seed;     // seed of the slicing form
};

struct NuResult {
  long long value;
  std::vector<NuStep> steps;  // from X down to the zero-dimensional slice
};

/// nu(X) = m_d(X) - nu(X ∩ l^{-1}(0)), nu of a point germ = m0 - 1.
NuResult nu_vanishing(const EidsDescriptor& x, std::uint64_t seed, const Limits& limits = {});

}  // namespace eidsobs

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "eidsobs/groebner/ideal.hpp"

namespace eidsobs {

/// Guardrails for the basis engines. Exceeding any of them raises
/// Error(ResourceLimit); nothing is ever silently truncated.
struct Limits {
  unsigned max_degree = 60;
  std::size_t max_basis = 5000;
  /// Optional wall-clock deadline.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Optional deterministic work budget, in reduction term operations. The
  /// counter is shared by all copies made after with_work_budget().
  std::uint64_t max_work = 0;  // 0: unbounded
  std::shared_ptr<std::uint64_t> work_used;

  void check_deadline() const;
  /// Adds `units` to the shared work counter, then checks both budgets.
  void charge(std::uint64_t units) const;
  /// Copy of these limits with a deadline `budget` from now.
  Limits with_timeout(std::chrono::milliseconds budget) const;
  /// Copy of these limits with a fresh work counter capped at `units`.
  Limits with_work_budget(std::uint64_t units) const;
};

/// A standard basis under `order`: a Groebner basis for global orders, a
/// standard basis of the localisation at the origin for the local order.
/// The basis is minimal (pairwise non-divisible leading monomials); for
/// global orders it is also fully reduced and therefore canonical.
struct StandardBasis {
  VarContext context;
  MonomialOrder order;
  std::vector<Polynomial> basis;
  std::vector<Monomial> staircase;  // leading monomials, parallel to basis

  /// True when the ideal is the whole ring (or its localisation).
  bool is_unit() const;
  /// Normal form of f. Full reduction for global orders; for the local
  /// order a Mora weak normal form (zero iff f lies in the local ideal).
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
};

StandardBasis standard_basis(const Ideal& ideal, MonomialOrder order, const Limits& limits = {});

/// Dimension of the quotient by an ideal: nullopt stands for INFINITE.
using Colength = std::optional<std::uint64_t>;

/// Number of monomials outside the staircase; nullopt (INFINITE) iff some
/// variable has no pure power among the leading monomials.
Colength colength(const StandardBasis& sb);
Colength colength(const Ideal& ideal, MonomialOrder order, const Limits& limits = {});

/// Counts standard monomials of the monomial ideal generated by `leading`
/// in `nvars` variables.
Colength count_standard_monomials(const std::vector<Monomial>& leading, std::size_t nvars);

/// Krull dimension of Q[x]/I from the degrevlex staircase, via maximal
/// independent variable sets. Throws IdealIsUnit for I = (1). The zero
/// ideal has dimension N.
int krull_dimension(const Ideal& ideal, const Limits& limits = {});
int dimension_of_monomial_ideal(const std::vector<Monomial>& leading, std::size_t nvars);

/// Hilbert series data of Q[x]/(leading monomials): HS(t) = Q(t)/(1-t)^dim.
struct HilbertData {
  int dimension = -1;                   // -1 for the unit ideal
  std::vector<Integer> numerator;       // reduced numerator Q(t)
  Integer multiplicity = 0;             // Q(1)
};
HilbertData hilbert_data(const std::vector<Monomial>& leading, std::size_t nvars);

/// Hilbert-Samuel data of the local ring O/I at the origin, read off the
/// tangent cone (the local-order staircase).
HilbertData local_hilbert_samuel(const Ideal& ideal, const Limits& limits = {});

}  // namespace eidsobs

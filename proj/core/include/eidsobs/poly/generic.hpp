#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eidsobs/poly/polynomial.hpp"

namespace eidsobs {

/// Coefficient pool for generic choices: the primes up to 97 with both signs.
std::span<const int> generic_coefficient_pool();

/// Deterministic draw of `count` non-zero pool elements. `stream` separates
/// independent uses of the same seed (linear forms vs deformation matrices).
std::vector<Rational> draw_generic_coefficients(std::size_t count, std::uint64_t seed,
                                                std::uint64_t stream = 0);

/// A linear form on C^N together with the seed it was drawn from.
struct LinearForm {
  std::vector<Rational> coefficients;
  std::uint64_t seed = 0;

  Polynomial to_polynomial(const VarContext& ctx) const;
  bool is_zero() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Seeded generic linear form: all coefficients non-zero, reproducible.
LinearForm generic_linear_form(const VarContext& ctx, std::uint64_t seed);

/// Linear form given by explicit coefficients (seed recorded as 0).
LinearForm linear_form_from(const Polynomial& linear);

/// The hyperplane l = 0 as a graph over the remaining coordinates: the
/// variable with the largest |coefficient| (first on ties) is solved for.
struct HyperplaneRestriction {
  std::size_t variable;
  Polynomial value;  // in context().without(variable)

  const VarContext& context() const { return value.context(); }
  /// f restricted to the hyperplane, in the (N-1)-variable context.
  Polynomial apply(const Polynomial& f) const { return substitute(f, variable, value); }
};

/// Throws ZeroForm for l = 0 and OutOfRange when N < 2.
HyperplaneRestriction restrict_to_kernel(const LinearForm& l, const VarContext& ctx);

struct QuasiHomogeneousWeights {
  std::vector<Rational> weights;
  Rational degree = 1;
};

/// Positive rational weights making every term of `f` weighted degree 1, if
/// they exist. Underdetermined systems are resolved with a positive choice of
/// the free weights when one of a small set of candidates works.
std::optional<QuasiHomogeneousWeights> quasihomogeneous_weights(const Polynomial& f);

}  // namespace eidsobs

#include "eidsobs/eids/analysis.hpp"
#include "eidsobs/error.hpp"
#include "eidsobs/invariants/invariants.hpp"

namespace eidsobs {

namespace {

std::vector<Polynomial> generic_forms(const VarContext& ctx, int count, std::uint64_t seed) {
  auto coeffs = draw_generic_coefficients(ctx.size() * static_cast<std::size_t>(count), seed, 3);
  std::vector<Polynomial> out;
  for (int f = 0; f < count; ++f) {
    LinearForm l{{coeffs.begin() + f * static_cast<std::ptrdiff_t>(ctx.size()),
                  coeffs.begin() + (f + 1) * static_cast<std::ptrdiff_t>(ctx.size())},
                 seed};
    out.push_back(l.to_polynomial(ctx));
  }
  return out;
}

Ideal with_extra(const Ideal& ideal, const std::vector<Polynomial>& extra, std::size_t count) {
  std::vector<Polynomial> gens = ideal.generators();
  gens.insert(gens.end(), extra.begin(), extra.begin() + static_cast<std::ptrdiff_t>(count));
  return Ideal(ideal.context(), std::move(gens));
}

// Multiplicity of the parameter s on the (at most one-dimensional) local
// ring O/J: the lengths l_k of O/(J + s^k) grow by e(s) per step once s^k
// kills the finite-length part, and the increments never increase, so two
// equal consecutive increments give e(s). Returns nullopt when some l_k is
// infinite (s is not a parameter).
std::optional<std::uint64_t> multiplicity_along(const Ideal& j, std::size_t s_index, const Limits& limits) {
  const VarContext& ctx = j.context();
  Polynomial s = Polynomial::variable(ctx, s_index);
  std::uint64_t prev_len = 0;
  std::optional<std::uint64_t> prev_inc;
  Polynomial power = s;
  for (unsigned k = 1;; ++k) {
    auto len = colength(with_extra(j, {power}, 1), MonomialOrder::local(), limits);
    if (!len) return std::nullopt;
    std::uint64_t inc = *len - prev_len;
    if (prev_inc && *prev_inc == inc) return inc;
    prev_inc = inc;
    prev_len = *len;
    power *= s;
    if (k > limits.max_degree) throw Error(ErrorCode::ResourceLimit, "polar multiplicity did not stabilise");
  }
}

}  // namespace

std::uint64_t multiplicity_m0(const Ideal& ideal, int d, std::uint64_t seed, const Limits& limits) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative expected dimension");
  const VarContext& ctx = ideal.context();
  for (unsigned attempt = 0; attempt < kGenericRetries; ++attempt) {
    auto forms = generic_forms(ctx, d, seed + attempt);
    if (attempt == 0 && d >= 1 && colength(with_extra(ideal, forms, d - 1), MonomialOrder::local(), limits))
      throw Error(ErrorCode::DimensionMismatch, "germ has dimension below " + std::to_string(d));
    auto c = colength(with_extra(ideal, forms, d), MonomialOrder::local(), limits);
    if (c) return *c;
    if (d == 0) break;
  }
  throw Error(ErrorCode::DimensionMismatch, "germ has dimension above " + std::to_string(d));
}

PolarResult polar_multiplicity_md(const EidsDescriptor& x, const LinearForm& p, std::uint64_t seed,
                                  const Limits& limits) {
  if (!x.in_smoothable_range())
    throw Error(ErrorCode::NotSmoothable, "N >= (m-t+2)(n-t+2): no smoothing");
  const int d = x.expected_dimension();
  if (d < 1) throw Error(ErrorCode::OutOfRange, "polar multiplicity needs a positive-dimensional germ");
  const std::size_t n = x.N();
  const std::size_t c = x.codim();
  for (unsigned attempt = 0; attempt < kGenericRetries; ++attempt) {
    EssentialSmoothing sm = essential_smoothing(x, seed + attempt);
    const VarContext& big = sm.family.context();
    Ideal total = minors(sm.family, x.t());
    // Critical points of p on the fibres: dp in the span of the x-gradients
    // of the minors.
    PolyMatrix aug(big, total.size() + 1, n);
    for (std::size_t r = 0; r < total.size(); ++r)
      for (std::size_t v = 0; v < n; ++v) aug(r, v) = partial_derivative(total.generators()[r], v);
    for (std::size_t v = 0; v < n; ++v) aug(total.size(), v) = Polynomial::constant(big, p.coefficients[v]);
    Ideal polar = ideal_sum(total, minors(aug, c + 1));
    limits.check_deadline();
    auto e = multiplicity_along(polar, sm.s_index, limits);
    if (e) return {*e, seed + attempt};
  }
  throw Error(ErrorCode::GenericityExhausted, "no deformation with a polar curve finite over the parameter");
}

NuResult nu_vanishing(const EidsDescriptor& x, std::uint64_t seed, const Limits& limits) {
  if (!x.in_smoothable_range())
    throw Error(ErrorCode::NotSmoothable, "N >= (m-t+2)(n-t+2): no smoothing");
  const int d = x.expected_dimension();
  if (d < 0) throw Error(ErrorCode::DimensionMismatch, "codimension exceeds the ambient dimension");
  if (d == 0) {
    std::uint64_t m0 = multiplicity_m0(x.ideal(), 0, seed, limits);
    return {static_cast<long long>(m0) - 1, {{0, static_cast<long long>(m0), seed}}};
  }
  for (unsigned attempt = 0; attempt < kGenericRetries; ++attempt) {
    const std::uint64_t s = seed + attempt;
    LinearForm l = generic_linear_form(x.context(), s);
    try {
      PolarResult md = polar_multiplicity_md(x, l, s, limits);
      NuResult below = nu_vanishing(slice(x, l), s, limits);
      NuResult out{static_cast<long long>(md.value) - below.value, {{d, static_cast<long long>(md.value), s}}};
      out.steps.insert(out.steps.end(), below.steps.begin(), below.steps.end());
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GenericityExhausted && e.code() != ErrorCode::DimensionMismatch) throw;
    }
  }
  throw Error(ErrorCode::GenericityExhausted, "no generic slicing form found for the vanishing Euler characteristic");
}

}  // namespace eidsobs

#include "eidsobs/poly/generic.hpp"

#include <array>
#include <random>

#include "eidsobs/error.hpp"
#include "eidsobs/poly/linalg.hpp"

namespace eidsobs {

namespace {

constexpr std::array<int, 50> kPool = {
    2,  -2,  3,  -3,  5,  -5,  7,  -7,  11, -11, 13, -13, 17, -17, 19, -19, 23,
    -23, 29, -29, 31, -31, 37, -37, 41, -41, 43, -43, 47, -47, 53, -53, 59, -59,
    61, -61, 67, -67, 71, -71, 73, -73, 79, -79, 83, -83, 89, -89, 97, -97};

}  // namespace

std::span<const int> generic_coefficient_pool() { return kPool; }

std::vector<Rational> draw_generic_coefficients(std::size_t count, std::uint64_t seed,
                                                std::uint64_t stream) {
  // mt19937_64 output is specified by the standard; the reduction modulo the
  // pool size is ours, so the sequence is identical across platforms.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(kPool[rng() % kPool.size()]);
  return out;
}

Polynomial LinearForm::to_polynomial(const VarContext& ctx) const {
  if (coefficients.size() != ctx.size())
    throw Error(ErrorCode::InvalidArgument, "linear form size does not match context");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) terms.push_back({Monomial::variable(i), coefficients[i]});
  return Polynomial::from_terms(ctx, std::move(terms));
}

bool LinearForm::is_zero() const {
  for (const auto& c : coefficients)
    if (c != 0) return false;
  return true;
}

LinearForm generic_linear_form(const VarContext& ctx, std::uint64_t seed) {
  return LinearForm{draw_generic_coefficients(ctx.size(), seed, 1), seed};
}

LinearForm linear_form_from(const Polynomial& linear) {
  for (const auto& t : linear.terms())
    if (t.monomial.degree() != 1)
      throw Error(ErrorCode::InvalidArgument, "not a homogeneous linear form: " + linear.to_string());
  LinearForm l{linear_part(linear), 0};
  if (l.is_zero()) throw Error(ErrorCode::ZeroForm, "linear form is zero");
  return l;
}

HyperplaneRestriction restrict_to_kernel(const LinearForm& l, const VarContext& ctx) {
  if (l.coefficients.size() != ctx.size())
    throw Error(ErrorCode::InvalidArgument, "linear form size does not match context");
  if (l.is_zero()) throw Error(ErrorCode::ZeroForm, "restriction to the kernel of the zero form");
  if (ctx.size() < 2) throw Error(ErrorCode::OutOfRange, "cannot restrict C^1 to a hyperplane");
  std::size_t j = 0;
  Rational best = 0;
  for (std::size_t i = 0; i < l.coefficients.size(); ++i)
    if (abs(l.coefficients[i]) > best) {
      best = abs(l.coefficients[i]);
      j = i;
    }
  const VarContext rest = ctx.without(j);
  // x_j = -(1/c_j) * sum_{i != j} c_i x_i
  std::vector<Term> terms;
  for (std::size_t i = 0, k = 0; i < ctx.size(); ++i) {
    if (i == j) continue;
    if (l.coefficients[i] != 0) terms.push_back({Monomial::variable(k), -l.coefficients[i] / l.coefficients[j]});
    ++k;
  }
  return {j, Polynomial::from_terms(rest, std::move(terms))};
}

std::optional<QuasiHomogeneousWeights> quasihomogeneous_weights(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  const std::size_t n = f.context().size();
  RationalMatrix a(f.size(), n);
  std::vector<Rational> rhs(f.size(), 1);
  for (std::size_t r = 0; r < f.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = f.terms()[r].monomial[c];

  std::vector<std::size_t> free_cols;
  auto particular = solve(a, rhs, &free_cols);
  if (!particular) return std::nullopt;

  auto positive = [](const std::vector<Rational>& w) {
    for (const auto& x : w)
      if (x <= 0) return false;
    return true;
  };
  if (free_cols.empty()) {
    if (!positive(*particular)) return std::nullopt;
    return QuasiHomogeneousWeights{*particular, 1};
  }

  // Fix every free weight to one candidate value and re-solve.
  static const std::array<Rational, 8> candidates = {Rational(1, 2), Rational(1, 3), Rational(1, 4),
                                                     Rational(2, 3), Rational(1, 5), Rational(1, 6),
                                                     Rational(3, 4), Rational(1, 7)};
  for (const auto& c : candidates) {
    RationalMatrix fixed(f.size() + free_cols.size(), n);
    std::vector<Rational> b = rhs;
    for (std::size_t r = 0; r < f.size(); ++r)
      for (std::size_t k = 0; k < n; ++k) fixed(r, k) = a(r, k);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
      fixed(f.size() + i, free_cols[i]) = 1;
      b.push_back(c);
    }
    auto w = solve(fixed, b);
    if (w && positive(*w)) return QuasiHomogeneousWeights{*w, 1};
  }
  return std::nullopt;
}

}  // namespace eidsobs

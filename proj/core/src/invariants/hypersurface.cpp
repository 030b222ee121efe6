#include "eidsobs/error.hpp"
#include "eidsobs/invariants/invariants.hpp"

namespace eidsobs {

namespace {

Ideal jacobian_ideal(const Polynomial& g) {
  std::vector<Polynomial> parts;
  for (std::size_t i = 0; i < g.context().size(); ++i) parts.push_back(partial_derivative(g, i));
  return Ideal(g.context(), std::move(parts));
}

void require_germ(const Polynomial& g) {
  if (g.constant_term() != 0) throw Error(ErrorCode::NotAGerm, "g(0) != 0 for " + g.to_string());
}

}  // namespace

std::uint64_t milnor_hypersurface(const Polynomial& g, const Limits& limits) {
  require_germ(g);
  auto c = colength(jacobian_ideal(g), MonomialOrder::local(), limits);
  if (!c) throw Error(ErrorCode::NonIsolated, "non-isolated singularity: " + g.to_string());
  return *c;
}

std::uint64_t tjurina_hypersurface(const Polynomial& g, const Limits& limits) {
  require_germ(g);
  Ideal id = ideal_sum(Ideal(g.context(), {g}), jacobian_ideal(g));
  auto c = colength(id, MonomialOrder::local(), limits);
  if (!c) throw Error(ErrorCode::NonIsolated, "non-isolated singularity: " + g.to_string());
  return *c;
}

std::uint64_t milnor_orlik_oracle(const std::vector<Rational>& weights) {
  Rational mu = 1;
  for (const auto& w : weights) {
    if (w <= 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
    mu *= 1 / w - 1;
  }
  mu.canonicalize();
  if (mu.get_den() != 1 || mu < 0)
    throw Error(ErrorCode::NonIntegerResult, "Milnor-Orlik product " + format_rational(mu) + " is not a natural number");
  return mu.get_num().get_ui();
}

}  // namespace eidsobs

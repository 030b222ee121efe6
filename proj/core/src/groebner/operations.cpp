#include "eidsobs/groebner/operations.hpp"

#include "eidsobs/error.hpp"

namespace eidsobs {

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  Polynomial r = f.with_order(MonomialOrder::global());
  Polynomial d = g.with_order(MonomialOrder::global());
  std::vector<Term> q;
  while (!r.is_zero()) {
    if (!d.leading_monomial().divides(r.leading_monomial()))
      throw Error(ErrorCode::InvalidArgument, d.to_string() + " does not divide " + f.to_string());
    Monomial m = d.leading_monomial().quotient_of(r.leading_monomial());
    Rational c = r.leading_coeff() / d.leading_coeff();
    q.push_back({m, c});
    r.sub_mul(c, m, d);
  }
  return Polynomial::from_terms(f.context(), std::move(q));
}

namespace {

// Context with `count` fresh variables prepended.
VarContext prepend_fresh(const VarContext& ctx, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    std::string name = "t" + std::to_string(i);
    while (ctx.contains(name)) name += "_";
    names.push_back(name);
  }
  names.insert(names.end(), ctx.names().begin(), ctx.names().end());
  if (names.size() > kMaxVars) throw Error(ErrorCode::ResourceLimit, "too many variables");
  return VarContext(std::move(names));
}

}  // namespace

Ideal eliminate_leading(const Ideal& ideal, std::size_t count, const Limits& limits) {
  const VarContext& ctx = ideal.context();
  VarContext rest = ctx;
  for (std::size_t i = 0; i < count; ++i) rest = rest.without(0);
  StandardBasis gb = standard_basis(ideal, MonomialOrder::elimination(count), limits);
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis) {
    bool free = true;
    for (std::size_t i = 0; i < count && free; ++i) free = !g.involves(i);
    if (free) out.push_back(change_context(g.with_order(MonomialOrder::global()), rest));
  }
  return Ideal(rest, std::move(out));
}

Ideal intersection(const Ideal& a, const Ideal& b, const Limits& limits) {
  if (a.is_zero() || b.is_zero()) return Ideal(a.context(), {});
  const VarContext big = prepend_fresh(a.context(), 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * change_context(f, big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * change_context(g, big));
  Ideal out = eliminate_leading(Ideal(big, std::move(gens)), 1, limits);
  std::vector<Polynomial> back;
  for (const auto& g : out.generators()) back.push_back(change_context(g, a.context()));
  return Ideal(a.context(), std::move(back));
}

Ideal quotient(const Ideal& a, const Polynomial& f, const Limits& limits) {
  if (f.is_zero()) return Ideal::unit(a.context());
  Ideal meet = intersection(a, Ideal(a.context(), {f}), limits);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
  return reduced(Ideal(a.context(), std::move(gens)), limits);
}

Ideal quotient(const Ideal& a, const Ideal& b, const Limits& limits) {
  if (b.is_zero()) return Ideal::unit(a.context());
  Ideal out;
  bool first = true;
  for (const auto& g : b.generators()) {
    Ideal q = quotient(a, g, limits);
    out = first ? q : reduced(intersection(out, q, limits), limits);
    first = false;
  }
  return out;
}

Ideal saturation(const Ideal& a, const Ideal& b, const Limits& limits) {
  Ideal current = reduced(a, limits);
  for (;;) {
    limits.check_deadline();
    Ideal next = quotient(current, b, limits);
    if (contains(current, next, MonomialOrder::global(), limits)) return current;
    current = std::move(next);
  }
}

bool contains(const Ideal& a, const Ideal& b, MonomialOrder order, const Limits& limits) {
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  StandardBasis sb = standard_basis(a, order, limits);
  for (const auto& g : b.generators())
    if (!sb.contains(g)) return false;
  return true;
}

bool same_ideal(const Ideal& a, const Ideal& b, MonomialOrder order, const Limits& limits) {
  return contains(a, b, order, limits) && contains(b, a, order, limits);
}

Ideal reduced(const Ideal& ideal, const Limits& limits) {
  if (ideal.is_zero()) return ideal;
  StandardBasis gb = standard_basis(ideal, MonomialOrder::global(), limits);
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis) {
    Polynomial p = g.with_order(MonomialOrder::global());
    p.make_primitive();
    gens.push_back(std::move(p));
  }
  return Ideal(ideal.context(), std::move(gens));
}

}  // namespace eidsobs

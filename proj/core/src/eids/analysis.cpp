#include "eidsobs/eids/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "eidsobs/error.hpp"
#include "eidsobs/groebner/operations.hpp"
#include "eidsobs/poly/linalg.hpp"

namespace eidsobs {

namespace {

// Dimension of the germ of V(I) at the origin, -1 when V(I) misses it.
int germ_dimension(const Ideal& ideal, const Limits& limits) {
  if (ideal.is_zero()) return static_cast<int>(ideal.context().size());
  StandardBasis sb = standard_basis(ideal, MonomialOrder::local(), limits);
  if (sb.is_unit()) return -1;
  return dimension_of_monomial_ideal(sb.staircase, ideal.context().size());
}

Ideal unit_or_minors(const PolyMatrix& f, std::size_t size) {
  if (size == 0) return Ideal::unit(f.context());
  return minors(f, size);
}

}  // namespace

TypeCheckReport check_determinantal(const EidsDescriptor& x, const Limits& limits) {
  TypeCheckReport r;
  r.codim_expected = x.codim();
  r.dimension = germ_dimension(x.ideal(), limits);
  r.codim_actual = r.dimension < 0 ? x.N() + 1 : x.N() - static_cast<std::size_t>(r.dimension);
  // M^t has codim > N only when X is the origin alone; that case passes
  // when the germ is zero-dimensional.
  r.is_determinantal = r.codim_expected <= x.N() ? r.codim_actual == r.codim_expected
                                                 : r.dimension == 0;
  r.is_ids = x.in_ids_range();
  r.is_smoothable = x.in_smoothable_range();
  r.corank = corank_at_origin(x);
  r.three_strata_ok = x.in_three_strata_range();
  if (x.t() >= 2 && r.three_strata_ok && r.is_determinantal)
    r.sigma_is_icis = verify_sigma_icis(x, limits);
  return r;
}

StratificationReport stratification(const EidsDescriptor& x, const Limits& limits) {
  StratificationReport out;
  for (std::size_t i = 1; i <= x.t(); ++i) {
    Ideal id = minors(x.matrix(), i);
    int dim = germ_dimension(id, limits);
    out.strata.push_back({i, id, x.expected_codim(i), dim, dim < 0});
  }
  return out;
}

std::size_t corank_at_origin(const EidsDescriptor& x) {
  const std::size_t mn = x.m() * x.n();
  RationalMatrix lin(mn, x.N());
  for (std::size_t r = 0; r < x.m(); ++r)
    for (std::size_t c = 0; c < x.n(); ++c) {
      auto part = linear_part(x.matrix()(r, c));
      for (std::size_t v = 0; v < x.N(); ++v) lin(r * x.n() + c, v) = part[v];
    }
  return mn - rank(lin);
}

Ideal singular_set(const EidsDescriptor& x) { return unit_or_minors(x.matrix(), x.t() - 1); }

std::vector<Polynomial> minimal_local_generators(const Ideal& ideal, const Limits& limits) {
  Ideal id = ideal.linearly_reduced();
  std::vector<Polynomial> gens = id.generators();
  Ideal mi = ideal_product(Ideal::maximal(id.context()), id);
  // Greedy pass: drop a generator lying in (others) + m*I.
  std::size_t k = 0;
  while (k < gens.size()) {
    std::vector<Polynomial> others = mi.generators();
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != k) others.push_back(gens[j]);
    StandardBasis sb = standard_basis(Ideal(id.context(), others), MonomialOrder::local(), limits);
    if (sb.contains(gens[k]))
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }
  return gens;
}

bool verify_sigma_icis(const EidsDescriptor& x, const Limits& limits) {
  Ideal sigma = singular_set(x);
  if (sigma.has_unit_generator()) return true;  // empty singular set
  int dim = germ_dimension(sigma, limits);
  if (dim < 0) return true;
  const std::size_t codim = x.N() - static_cast<std::size_t>(dim);
  std::vector<Polynomial> eqs = sigma.linearly_reduced().generators();
  if (eqs.size() != codim) eqs = minimal_local_generators(sigma, limits);
  if (eqs.size() != codim) return false;
  if (dim == 0) return true;
  Ideal locus = ideal_sum(Ideal(sigma.context(), eqs), minors(jacobian(sigma.context(), eqs), codim));
  return colength(locus, MonomialOrder::local(), limits).has_value();
}

bool verify_essential_isolation(const EidsDescriptor& x, const Limits& limits) {
  const VarContext& ctx = x.context();
  for (std::size_t i = 1; i <= x.t(); ++i) {
    Ideal stratum = minors(x.matrix(), i);
    const std::size_t c = x.expected_codim(i);
    Ideal locus = stratum;
    PolyMatrix jac = jacobian(ctx, stratum.generators());
    if (c <= std::min(jac.rows(), jac.cols())) locus = ideal_sum(stratum, minors(jac, c));
    if (i >= 2) {
      Ideal below = minors(x.matrix(), i - 1);
      locus = saturation(locus, below, limits);
    }
    if (locus.is_zero()) return false;
    if (!colength(locus, MonomialOrder::local(), limits)) return false;
  }
  return true;
}

EidsDescriptor slice(const EidsDescriptor& x, const LinearForm& l) {
  HyperplaneRestriction h = restrict_to_kernel(l, x.context());
  PolyMatrix out(h.context(), x.m(), x.n());
  for (std::size_t r = 0; r < x.m(); ++r)
    for (std::size_t c = 0; c < x.n(); ++c) out(r, c) = h.apply(x.matrix()(r, c));
  return EidsDescriptor(std::move(out), x.t());
}

EssentialSmoothing essential_smoothing(const EidsDescriptor& x, std::uint64_t seed) {
  VarContext big = x.context().with_appended("s");
  const std::size_t s = big.size() - 1;
  auto constants = draw_generic_coefficients(x.m() * x.n(), seed, 2);
  PolyMatrix family(big, x.m(), x.n());
  Polynomial sv = Polynomial::variable(big, s);
  for (std::size_t r = 0; r < x.m(); ++r)
    for (std::size_t c = 0; c < x.n(); ++c)
      family(r, c) = change_context(x.matrix()(r, c), big) + constants[r * x.n() + c] * sv;
  return {std::move(family), s, std::move(constants), seed};
}

}  // namespace eidsobs

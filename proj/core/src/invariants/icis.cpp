#include "eidsobs/error.hpp"
#include "eidsobs/invariants/invariants.hpp"

namespace eidsobs {

void verify_icis(const IcisPresentation& x, const Limits& limits) {
  const std::size_t n = x.context.size();
  if (x.equations.size() != x.codim)
    throw Error(ErrorCode::NotICIS, "equation count differs from the claimed codimension");
  for (const auto& f : x.equations)
    if (f.is_zero() || f.constant_term() != 0)
      throw Error(ErrorCode::NotICIS, "equation does not vanish at the origin");
  if (x.codim == 0) return;
  Ideal id(x.context, x.equations);
  StandardBasis sb = standard_basis(id, MonomialOrder::local(), limits);
  int dim = dimension_of_monomial_ideal(sb.staircase, n);
  if (dim != static_cast<int>(n - x.codim))
    throw Error(ErrorCode::NotICIS, "germ dimension " + std::to_string(dim) + " differs from the expected " +
                                        std::to_string(n - x.codim));
  if (dim == 0) return;
  Ideal locus = ideal_sum(id, minors(jacobian(x.context, x.equations), x.codim));
  if (!colength(locus, MonomialOrder::local(), limits))
    throw Error(ErrorCode::NotICIS, "singular locus is not isolated");
}

namespace {

std::uint64_t milnor_icis_verified(const IcisPresentation& x, std::uint64_t seed, const Limits& limits) {
  const std::size_t n = x.context.size();
  const std::size_t k = x.codim;
  if (k == 0) return 0;
  Ideal id(x.context, x.equations);
  if (k == n) {
    auto c = colength(id, MonomialOrder::local(), limits);
    return *c - 1;
  }
  for (unsigned attempt = 0; attempt < kGenericRetries; ++attempt) {
    const std::uint64_t s = seed + attempt;
    LinearForm l = generic_linear_form(x.context, s);
    std::vector<Polynomial> rows = x.equations;
    rows.push_back(l.to_polynomial(x.context));
    Ideal polar = ideal_sum(id, minors(jacobian(x.context, rows), k + 1));
    auto total = colength(polar, MonomialOrder::local(), limits);
    if (!total) continue;
    HyperplaneRestriction h = restrict_to_kernel(l, x.context);
    IcisPresentation y{h.context(), {}, k};
    for (const auto& f : x.equations) y.equations.push_back(h.apply(f));
    try {
      verify_icis(y, limits);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotICIS) continue;
      throw;
    }
    return *total - milnor_icis_verified(y, s, limits);
  }
  throw Error(ErrorCode::GenericityExhausted, "no generic slice found for the ICIS after " +
                                                  std::to_string(kGenericRetries) + " seeds");
}

}  // namespace

std::uint64_t milnor_icis(const IcisPresentation& x, std::uint64_t seed, const Limits& limits) {
  verify_icis(x, limits);
  return milnor_icis_verified(x, seed, limits);
}

}  // namespace eidsobs

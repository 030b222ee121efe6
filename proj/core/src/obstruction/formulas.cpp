#include <algorithm>
#include <array>

#include "eidsobs/error.hpp"
#include "eidsobs/obstruction/obstruction.hpp"

namespace eidsobs {

namespace {

long long sign(long long e) { return e % 2 == 0 ? 1 : -1; }

long long binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long long>(n - k + i) / static_cast<long long>(i);
  return r;
}

constexpr std::array<std::pair<Regime, std::string_view>, 5> kRegimes = {{
    {Regime::Smoothable, "Smoothable"},
    {Regime::NEquals6, "NEquals6"},
    {Regime::NGe7Type232, "NGe7Type232"},
    {Regime::Corank1FastPath, "Corank1FastPath"},
    {Regime::GeneralThreeStrata, "GeneralThreeStrata"},
}};

}  // namespace

long long chi_bar_generic_link(std::size_t m, std::size_t n, std::size_t t) {
  if (t < 1 || t > m || m > n)
    throw Error(ErrorCode::OutOfRange, "generic link needs 1 <= t <= m <= n, got (" + std::to_string(m) + "," +
                                           std::to_string(n) + "," + std::to_string(t) + ")");
  return sign(static_cast<long long>(t)) * binomial(m - 1, t - 1);
}

long long complex_link_chi(const EidsDescriptor& x, std::size_t i) {
  if (i < 1 || i + 1 > x.t())
    throw Error(ErrorCode::OutOfRange, "complex link needs 1 <= i <= t-1, got i=" + std::to_string(i));
  std::size_t a = x.m() - i + 1, b = x.n() - i + 1;
  if (a > b) std::swap(a, b);
  return 1 + chi_bar_generic_link(a, b, x.t() - i + 1);
}

long long lefschetz_combine(const std::vector<StratumDatum>& strata) {
  long long sum = 0;
  for (const auto& s : strata) sum += s.chi_slice * s.eu_on_stratum;
  return sum;
}

long long eu_smoothable(int d, long long nu, long long md) { return 1 + sign(d) * nu + sign(d + 1) * md; }

long long eu_n_equals_6(long long chi_tilde_slice) { return chi_tilde_slice + 1; }

long long eu_n_ge_7(std::size_t N, long long mu_sigma_slice, long long chi_tilde_slice) {
  if (N < 7) throw Error(ErrorCode::RegimeMismatch, "the N >= 7 formula needs N >= 7");
  return sign(static_cast<long long>(N) - 7) * mu_sigma_slice + chi_tilde_slice + 2;
}

long long chi_tilde_corank1(std::size_t N, long long mu_g) {
  if (N < 6) throw Error(ErrorCode::RegimeMismatch, "the corank-one formula needs N >= 6");
  return sign(static_cast<long long>(N) - 1) * mu_g;
}

long long eu_three_strata(int sigma_slice_dim, long long mu_sigma_slice, long long chi_link,
                          long long chi_tilde_slice) {
  return (sign(sigma_slice_dim) * mu_sigma_slice + 1) * (chi_link - 1) + chi_tilde_slice + 1;
}

std::string_view to_string(Regime regime) {
  for (const auto& [r, s] : kRegimes)
    if (r == regime) return s;
  return "?";
}

Regime regime_from_string(std::string_view text) {
  for (const auto& [r, s] : kRegimes)
    if (s == text) return r;
  throw Error(ErrorCode::InvalidArgument, "unknown regime '" + std::string(text) + "'");
}

void SuppliedInputs::add(InvariantName name, std::string subject, long long value, Provenance provenance) {
  reports.push_back({name, value, std::move(provenance), std::move(subject)});
}

const InvariantReport* SuppliedInputs::find(InvariantName name, std::string_view subject) const {
  for (const auto& r : reports)
    if (r.name == name && r.subject == subject) return &r;
  return nullptr;
}

}  // namespace eidsobs

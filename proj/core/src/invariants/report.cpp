#include "eidsobs/invariants/report.hpp"

#include <array>

#include "eidsobs/error.hpp"

namespace eidsobs {

namespace {

constexpr std::array<std::pair<InvariantName, std::string_view>, 7> kNames = {{
    {InvariantName::Mu, "mu"},
    {InvariantName::Tau, "tau"},
    {InvariantName::M0, "m0"},
    {InvariantName::Md, "md"},
    {InvariantName::Nu, "nu"},
    {InvariantName::ChiTilde, "chi_tilde"},
    {InvariantName::Eu, "eu"},
}};

}  // namespace

std::string_view to_string(InvariantName name) {
  for (const auto& [n, s] : kNames)
    if (n == name) return s;
  return "?";
}

InvariantName invariant_from_string(std::string_view text) {
  for (const auto& [n, s] : kNames)
    if (s == text) return n;
  throw Error(ErrorCode::InvalidArgument, "unknown invariant '" + std::string(text) + "'");
}

std::string Provenance::to_string() const {
  switch (kind) {
    case Kind::Computed: return "computed(seed=" + std::to_string(seed) + ", " + method + ")";
    case Kind::Supplied: return "supplied";
    case Kind::Corpus: return "corpus(" + row + ")";
  }
  return "?";
}

}  // namespace eidsobs

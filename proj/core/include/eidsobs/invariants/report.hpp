#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace eidsobs {

enum class InvariantName { Mu, Tau, M0, Md, Nu, ChiTilde, Eu };

std::string_view to_string(InvariantName name);
/// Inverse of to_string; nullopt-free: throws InvalidArgument.
InvariantName invariant_from_string(std::string_view text);

/// Where an integer came from. Every reported value carries one.
struct Provenance {
  enum class Kind { Computed, Supplied, Corpus };
  Kind kind = Kind::Computed;
  std::uint64_t seed = 0;    // Computed
  std::string method;        // Computed: short description of the route
  std::string row;           // Corpus: row id

  static Provenance computed(std::uint64_t seed, std::string method) {
    return {Kind::Computed, seed, std::move(method), {}};
  }
  static Provenance supplied() { return {Kind::Supplied, 0, {}, {}}; }
  static Provenance corpus(std::string row) { return {Kind::Corpus, 0, {}, std::move(row)}; }

  /// "computed(seed=3, method)", "supplied", "corpus(row)".
  std::string to_string() const;
};

struct InvariantReport {
  InvariantName name;
  long long value;
  Provenance provenance;
  /// What the value is attached to, e.g. "X" or "X∩l⁻¹(0)".
  std::string subject = "X";
};

}  // namespace eidsobs

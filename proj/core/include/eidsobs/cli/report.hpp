#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eidsobs/invariants/report.hpp"

namespace eidsobs {

/// Ordered `key=value` lines: the machine-readable output format. Keys are
/// dotted ASCII names; values run to the end of the line.
class KeyValueReport {
 public:
  void set(std::string key, std::string value);
  void set(std::string key, long long value) { set(std::move(key), std::to_string(value)); }
  /// Writes input.<i>.{name,subject,value,provenance,seed,method,row}.
  void add_invariant(const std::string& prefix, const InvariantReport& r);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::optional<std::string> get(std::string_view key) const;
  /// Throws InvalidArgument when the key is missing or not an integer.
  long long get_int(std::string_view key) const;

  std::string to_text() const;
  /// Inverse of to_text. Throws SyntaxError on a line without '='.
  static KeyValueReport parse(std::string_view text);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace eidsobs

#include "eidsobs/cli/report.hpp"

#include "eidsobs/error.hpp"

namespace eidsobs {

void KeyValueReport::set(std::string key, std::string value) {
  for (auto& c : value)
    if (c == '\n') c = ' ';
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = std::move(value);
      return;
    }
  entries_.emplace_back(std::move(key), std::move(value));
}

void KeyValueReport::add_invariant(const std::string& prefix, const InvariantReport& r) {
  set(prefix + ".name", std::string(to_string(r.name)));
  set(prefix + ".subject", r.subject);
  set(prefix + ".value", r.value);
  switch (r.provenance.kind) {
    case Provenance::Kind::Computed:
      set(prefix + ".provenance", "computed");
      set(prefix + ".seed", static_cast<long long>(r.provenance.seed));
      set(prefix + ".method", r.provenance.method);
      break;
    case Provenance::Kind::Supplied:
      set(prefix + ".provenance", "supplied");
      break;
    case Provenance::Kind::Corpus:
      set(prefix + ".provenance", "corpus");
      set(prefix + ".row", r.provenance.row);
      break;
  }
}

std::optional<std::string> KeyValueReport::get(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

long long KeyValueReport::get_int(std::string_view key) const {
  auto v = get(key);
  if (!v) throw Error(ErrorCode::InvalidArgument, "missing key '" + std::string(key) + "'");
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(*v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v->size())
    throw Error(ErrorCode::InvalidArgument, "key '" + std::string(key) + "' is not an integer");
  return out;
}

std::string KeyValueReport::to_text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

KeyValueReport KeyValueReport::parse(std::string_view text) {
  KeyValueReport r;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty()) {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos || eq == 0) throw SyntaxError(pos, "expected key=value");
      r.entries_.emplace_back(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
    }
    pos = eol + 1;
  }
  return r;
}

}  // namespace eidsobs

#include "eidsobs/cli/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eidsobs/eids/analysis.hpp"
#include "eidsobs/error.hpp"

namespace eidsobs {

namespace {

std::string trimmed(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trimmed(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

std::int64_t to_int(const Field& f, std::string_view text) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(std::string(text), &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw SyntaxError(f.offset, "expected an integer in '" + f.value + "'");
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  for (const auto& block : parse_blocks(text)) {
    if (block.fields.empty()) continue;
    CorpusEntry e;
    for (const auto& f : block.fields) {
      if (f.key == "id") e.id = f.value;
      else if (f.key == "table") e.table = static_cast<int>(to_int(f, f.value));
      else if (f.key == "type") e.type = f.value;
      else if (f.key == "vars") e.vars = split(f.value, ',');
      else if (f.key == "t") e.t = static_cast<std::size_t>(to_int(f, f.value));
      else if (f.key == "matrix") e.matrix = f.value;
      else if (f.key == "tau") e.tau = f.value;
      else if (f.key == "eu") e.eu = f.value;
      else if (f.key == "note") e.note = f.value;
      else if (f.key == "conditions") {
        for (const auto& c : split(f.value, ',')) {
          std::size_t ge = c.find(">=");
          if (ge == std::string::npos) throw SyntaxError(f.offset, "condition must read name>=value");
          e.params.push_back({trimmed(c.substr(0, ge)), to_int(f, trimmed(c.substr(ge + 2)))});
        }
      } else if (f.key == "flags") {
        for (const auto& flag : split(f.value, ',')) {
          if (flag == "suspect") e.suspect = true;
          else if (flag == "parse-exempt") e.parse_exempt = true;
          else throw SyntaxError(f.offset, "unknown flag '" + flag + "'");
        }
      } else if (f.key.rfind("supplied.", 0) == 0) {
        supplied_key(std::string_view(f.key).substr(9));
        e.supplied.emplace_back(f.key.substr(9), f.value);
      } else {
        throw SyntaxError(f.offset, "unknown corpus field '" + f.key + "'");
      }
    }
    if (e.id.empty() || e.vars.empty() || e.t == 0 || e.matrix.empty() || e.eu.empty())
      throw SyntaxError(block.offset, "corpus entry needs id, vars, t, matrix and eu");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::optional<std::string>& dir) {
  std::vector<std::pair<std::string, std::string>> files;
  if (dir) {
    std::error_code ec;
    for (const auto& p : std::filesystem::directory_iterator(*dir, ec)) {
      if (p.path().extension() != ".corpus") continue;
      std::ifstream in(p.path(), std::ios::binary);
      if (!in) throw Error(ErrorCode::Io, "cannot read '" + p.path().string() + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      files.emplace_back(p.path().filename().string(), ss.str());
    }
    if (ec) throw Error(ErrorCode::Io, "cannot list corpus directory '" + *dir + "'");
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error(ErrorCode::Io, "no .corpus files in '" + *dir + "'");
  } else {
    files = embedded_corpus_files();
  }
  std::vector<CorpusEntry> out;
  for (const auto& [name, text] : files) {
    try {
      auto entries = parse_corpus(text);
      out.insert(out.end(), entries.begin(), entries.end());
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.position(), name + ": " + e.what());
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.table < b.table; });
  return out;
}

std::vector<ParamMap> instantiations(const CorpusEntry& entry) {
  std::vector<ParamMap> out(1);
  for (const auto& p : entry.params) {
    std::vector<ParamMap> next;
    for (const auto& base : out)
      for (std::int64_t v : {p.min, p.min + 1}) {
        ParamMap m = base;
        m[p.name] = v;
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

Document instantiate(const CorpusEntry& entry, const ParamMap& params) {
  Document doc;
  doc.vars = entry.vars;
  doc.t = entry.t;
  doc.matrix = parse_matrix_text(entry.matrix, 0);
  doc.params = params;
  for (const auto& [key, expr] : entry.supplied) {
    auto [name, subject] = supplied_key(key);
    doc.supplied.add(name, subject, evaluate_int_expr(expr, params), Provenance::corpus(entry.id));
  }
  return doc;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::SuppliedMatch: return "SUPPLIED-MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

std::string params_to_string(const ParamMap& params) {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  return out;
}

CorpusOutcome run_corpus_instance(const CorpusEntry& entry, const ParamMap& params, std::uint64_t seed,
                                  const Limits& limits, std::uint64_t work_budget) {
  CorpusOutcome out;
  out.id = entry.id;
  out.type = entry.type;
  out.params = params;
  if (entry.suspect) {
    out.note = "suspect row" + (entry.note.empty() ? "" : ": " + entry.note);
    return out;
  }
  if (entry.parse_exempt) {
    out.note = "parse-exempt row" + (entry.note.empty() ? "" : ": " + entry.note);
    return out;
  }
  out.printed_eu = evaluate_int_expr(entry.eu, params);
  Document doc = instantiate(entry, params);
  EidsDescriptor x = build_descriptor(doc);

  auto finish = [&](const EuResult& r, bool used_supplied) {
    out.eu = r.value;
    out.regime = r.regime;
    out.inputs = r.inputs;
    const bool external = std::any_of(r.inputs.begin(), r.inputs.end(), [](const InvariantReport& i) {
      return i.provenance.kind != Provenance::Kind::Computed;
    });
    if (r.value != out.printed_eu) out.verdict = Verdict::Mismatch;
    else out.verdict = external || used_supplied ? Verdict::SuppliedMatch : Verdict::Match;
  };

  try {
    Limits budgeted = limits.with_work_budget(work_budget);
    TypeCheckReport check = check_determinantal(x, budgeted);
    if (!check.is_determinantal) {
      out.verdict = Verdict::Mismatch;
      out.note = "not determinantal: codimension " + std::to_string(check.codim_actual) + ", expected " +
                 std::to_string(check.codim_expected);
      return out;
    }
    if (!verify_essential_isolation(x, budgeted)) {
      out.verdict = Verdict::Mismatch;
      out.note = "not essentially isolated";
      return out;
    }
    finish(eu_dispatch(x, seed, {}, budgeted), false);
    return out;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceLimit && e.code() != ErrorCode::MissingInput) throw;
    out.note = std::string(e.code() == ErrorCode::ResourceLimit ? "work budget exhausted" : "missing input") +
               " (" + e.what() + ")";
  }
  if (doc.supplied.reports.empty()) return out;
  SuppliedInputs supplied = doc.supplied;
  supplied.prefer = true;
  try {
    finish(eu_dispatch(x, seed, supplied, limits), true);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceLimit && e.code() != ErrorCode::MissingInput) throw;
    out.note += "; with supplied values: " + std::string(e.what());
  }
  return out;
}

}  // namespace eidsobs

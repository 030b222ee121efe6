#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eidsobs/cli/document.hpp"
#include "eidsobs/obstruction/obstruction.hpp"

namespace eidsobs {

struct ParamRange {
  std::string name;
  std::int64_t min = 0;
};

/// One table row: a matrix template with parameter constraints and the
/// printed tau and Eu expressions.
struct CorpusEntry {
  std::string id;
  int table = 0;
  std::string type;
  std::vector<std::string> vars;
  std::size_t t = 0;
  std::string matrix;                 // `[..; ..]` template text
  std::vector<ParamRange> params;
  std::string tau;
  std::string eu;
  std::vector<std::pair<std::string, std::string>> supplied;  // key, expression
  bool suspect = false;
  bool parse_exempt = false;
  std::string note;
};

std::vector<CorpusEntry> parse_corpus(std::string_view text);

/// The corpus files compiled into the library, as (name, text) pairs.
std::vector<std::pair<std::string, std::string>> embedded_corpus_files();

/// Entries of every `*.corpus` file in `dir` (by file name), or of the
/// embedded files when `dir` is empty; sorted by table, file order within.
std::vector<CorpusEntry> load_corpus(const std::optional<std::string>& dir = std::nullopt);

/// Parameter assignments {min, min+1} for every parameter, in
/// lexicographic order; a single empty map for rows without parameters.
std::vector<ParamMap> instantiations(const CorpusEntry& entry);

/// The entry as an input document at the given parameters; supplied values
/// carry Corpus provenance naming the row.
Document instantiate(const CorpusEntry& entry, const ParamMap& params);

enum class Verdict { Match, SuppliedMatch, Mismatch, Skipped };
std::string_view to_string(Verdict v);

struct CorpusOutcome {
  std::string id;
  std::string type;
  ParamMap params;
  Verdict verdict = Verdict::Skipped;
  long long printed_eu = 0;
  std::optional<long long> eu;
  std::optional<Regime> regime;
  std::vector<InvariantReport> inputs;
  std::string note;
};

/// "k=2, l=3" (empty for no parameters).
std::string params_to_string(const ParamMap& params);

/// Runs one instantiation: the full pipeline under a work budget first,
/// then, if that runs out, again with the row's supplied values.
CorpusOutcome run_corpus_instance(const CorpusEntry& entry, const ParamMap& params, std::uint64_t seed,
                                  const Limits& limits, std::uint64_t work_budget);

}  // namespace eidsobs

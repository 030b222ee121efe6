#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "eidsobs/cli/corpus.hpp"
#include "eidsobs/cli/document.hpp"
#include "eidsobs/error.hpp"
#include "eidsobs/groebner/standard_basis.hpp"

namespace eidsobs {

/// Default per-instance work budget for corpus-run, in reduction term
/// operations.
inline constexpr std::uint64_t kDefaultCorpusWork = 2'000'000;

struct RunOptions {
  std::uint64_t seed = 0;
  Limits limits;
  bool machine = false;
  std::optional<std::string> corpus_dir;
  std::uint64_t corpus_work = kDefaultCorpusWork;
  /// Called with one line per finished corpus instance.
  std::function<void(const std::string&)> progress;
};

/// Rendered output of one command plus the process exit code.
struct CommandOutput {
  int exit_code = 0;
  std::string text;
  bool error = false;  // text is a diagnostic
};

/// Exit codes: 0 success, 2 check failure or mismatch, 3 resource limit,
/// 4 I/O or parse error.
int exit_code_for(const Error& e);

CommandOutput run_check(const Document& doc, const RunOptions& opts);
/// m_d (along the document's projection, else a generic form), nu and,
/// for smoothable germs, mu by the Le-Greuel relation.
CommandOutput run_invariants(const Document& doc, const RunOptions& opts);
CommandOutput run_eu(const Document& doc, const RunOptions& opts);
CommandOutput run_corpus(const RunOptions& opts);

/// Reads the document at `path` and runs `command` (check, invariants, eu);
/// errors become a message and the matching exit code.
CommandOutput run_command(const std::string& command, const std::string& path, const RunOptions& opts);

}  // namespace eidsobs

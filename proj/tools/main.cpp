#include <iostream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "eidsobs/cli/commands.hpp"

using namespace eidsobs;

int main(int argc, char** argv) {
  CLI::App app{"eidsobs: Euler obstruction of determinantal singularities"};
  app.require_subcommand(1);
  app.fallthrough();

  RunOptions opts;
  unsigned max_degree = opts.limits.max_degree;
  std::size_t max_basis = opts.limits.max_basis;
  std::string corpus_dir;
  app.add_option("--seed", opts.seed, "seed for generic choices")->capture_default_str();
  app.add_option("--max-degree", max_degree, "largest polynomial degree in a basis")->capture_default_str();
  app.add_option("--max-basis", max_basis, "largest standard basis size")->capture_default_str();
  app.add_flag("--machine", opts.machine, "key=value output");
  app.add_option("--corpus-dir", corpus_dir, "read *.corpus files from this directory instead of the built-in tables");
  auto* budget = app.add_option("--work-budget", opts.corpus_work,
                                "reduction work allowed; per instance for corpus-run, which then falls back to "
                                "supplied values, otherwise a hard limit (exit 3)")
      ->capture_default_str();

  bool progress = false;
  app.add_flag("--progress", progress, "corpus-run: report each instance on stderr as it finishes");

  std::string file;
  const std::pair<const char*, const char*> commands[] = {
      {"check", "verify the germ is an EIDS and report its strata"},
      {"invariants", "m_d, nu and the Milnor number"},
      {"eu", "local Euler obstruction"}};
  for (const auto& [name, desc] : commands) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("file", file, "input document")->required();
  }
  app.add_subcommand("corpus-run", "run the table corpus");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }
  opts.limits.max_degree = max_degree;
  opts.limits.max_basis = max_basis;
  if (!corpus_dir.empty()) opts.corpus_dir = corpus_dir;
  const std::string command = app.get_subcommands().front()->get_name();
  if (budget->count() > 0 && command != "corpus-run") opts.limits = opts.limits.with_work_budget(opts.corpus_work);
  if (progress) opts.progress = [](const std::string& line) { std::cerr << line << std::endl; };

  CommandOutput out = run_command(command, file, opts);
  (out.error ? std::cerr : std::cout) << out.text;
  return out.exit_code;
}

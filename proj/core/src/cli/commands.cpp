#include "eidsobs/cli/commands.hpp"

#include <sstream>

#include "eidsobs/cli/report.hpp"
#include "eidsobs/eids/analysis.hpp"
#include "eidsobs/invariants/invariants.hpp"
#include "eidsobs/obstruction/obstruction.hpp"

namespace eidsobs {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string type_label(const EidsDescriptor& x) {
  return "(" + std::to_string(x.m()) + "," + std::to_string(x.n()) + "," + std::to_string(x.t()) + ")";
}

std::string render_human(const InvariantReport& r) {
  return std::string(to_string(r.name)) + "(" + r.subject + ") = " + std::to_string(r.value) + "  [" +
         r.provenance.to_string() + "]";
}

CommandOutput render(const KeyValueReport& kv, const std::string& human, bool machine, int code = 0) {
  return {code, machine ? kv.to_text() : human};
}

// Corpus rows whose instantiation at minimal or minimal+1 parameters has
// the same matrix as x.
std::vector<std::string> matching_rows(const EidsDescriptor& x, const RunOptions& opts) {
  std::vector<std::string> rows;
  std::vector<CorpusEntry> corpus;
  try {
    corpus = load_corpus(opts.corpus_dir);
  } catch (const Error&) {
    return rows;
  }
  const std::string target = x.to_string();
  for (const auto& e : corpus) {
    if (e.parse_exempt || e.supplied.empty() || e.vars != x.context().names()) continue;
    for (const auto& params : instantiations(e)) {
      try {
        if (build_descriptor(instantiate(e, params)).to_string() == target) {
          rows.push_back(e.id + (params.empty() ? "" : " (" + params_to_string(params) + ")"));
          break;
        }
      } catch (const Error&) {
      }
    }
  }
  return rows;
}

}  // namespace

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::Io:
      return 4;
    case ErrorCode::ResourceLimit:
      return 3;
    default:
      return 2;
  }
}

CommandOutput run_check(const Document& doc, const RunOptions& opts) {
  EidsDescriptor x = build_descriptor(doc);
  TypeCheckReport r = check_determinantal(x, opts.limits);
  StratificationReport strata = stratification(x, opts.limits);
  const bool isolated = r.is_determinantal && verify_essential_isolation(x, opts.limits);

  KeyValueReport kv;
  kv.set("command", "check");
  kv.set("seed", static_cast<long long>(opts.seed));
  kv.set("type", type_label(x));
  kv.set("N", static_cast<long long>(x.N()));
  kv.set("determinantal", yes_no(r.is_determinantal));
  kv.set("codim.expected", static_cast<long long>(r.codim_expected));
  kv.set("codim.actual", static_cast<long long>(r.codim_actual));
  kv.set("dim", r.dimension);
  kv.set("ids", yes_no(r.is_ids));
  kv.set("essentially_isolated", yes_no(isolated));
  kv.set("smoothable", yes_no(r.is_smoothable));
  kv.set("three_strata", yes_no(r.three_strata_ok));
  kv.set("corank", static_cast<long long>(r.corank));
  if (r.sigma_is_icis) kv.set("sigma_icis", yes_no(*r.sigma_is_icis));
  kv.set("strata.count", static_cast<long long>(strata.strata.size()));
  for (std::size_t i = 0; i < strata.strata.size(); ++i) {
    const Stratum& s = strata.strata[i];
    const std::string p = "stratum." + std::to_string(i);
    kv.set(p + ".index", static_cast<long long>(s.index));
    kv.set(p + ".codim_expected", static_cast<long long>(s.expected_codim));
    kv.set(p + ".dim", s.dimension);
  }

  std::ostringstream h;
  if (r.is_determinantal)
    h << "determinantal " << type_label(x) << ", dim " << r.dimension << ", IDS: " << yes_no(r.is_ids)
      << ", smoothable: " << yes_no(r.is_smoothable) << "\n";
  else
    h << "not determinantal " << type_label(x) << ": codimension " << r.codim_actual << ", expected "
      << r.codim_expected << "\n";
  h << "N = " << x.N() << ", corank at 0 = " << r.corank << ", essentially isolated: " << yes_no(isolated)
    << ", at most three strata: " << yes_no(r.three_strata_ok) << "\n";
  if (r.sigma_is_icis) h << "singular set is an ICIS: " << yes_no(*r.sigma_is_icis) << "\n";
  for (const auto& s : strata.strata)
    h << "  rank < " << s.index << ": expected codim " << s.expected_codim << ", dim "
      << (s.empty ? std::string("empty at 0") : std::to_string(s.dimension)) << "\n";
  h << "seed " << opts.seed << "\n";
  return render(kv, h.str(), opts.machine, r.is_determinantal ? 0 : 2);
}

CommandOutput run_invariants(const Document& doc, const RunOptions& opts) {
  EidsDescriptor x = build_descriptor(doc);
  std::optional<LinearForm> given = build_projection(doc);
  const LinearForm p = given ? *given : generic_linear_form(x.context(), opts.seed);
  const std::string p_method = given ? "polar curve, given projection" : "polar curve, generic projection";

  KeyValueReport kv;
  kv.set("command", "invariants");
  kv.set("seed", static_cast<long long>(opts.seed));
  kv.set("type", type_label(x));
  kv.set("N", static_cast<long long>(x.N()));
  const int d = x.expected_dimension();
  kv.set("dim", d);
  std::ostringstream h;
  h << "type " << type_label(x) << " in C^" << x.N() << ", dim " << d << ", seed " << opts.seed << "\n";

  std::vector<InvariantReport> out;
  if (!x.in_smoothable_range()) {
    kv.set("smoothable", "no");
    h << "not in the smoothable range: m_d, nu and mu are not defined by the smoothing\n";
  } else {
    kv.set("smoothable", "yes");
    PolarResult md = polar_multiplicity_md(x, p, opts.seed, opts.limits);
    out.push_back({InvariantName::Md, static_cast<long long>(md.value), Provenance::computed(md.seed, p_method), "X"});
    NuResult nu = nu_vanishing(x, opts.seed, opts.limits);
    out.push_back({InvariantName::Nu, nu.value, Provenance::computed(nu.steps.front().seed, "polar recursion"), "X"});
    if (d >= 1) {
      EidsDescriptor s = slice(x, p);
      NuResult below = nu_vanishing(s, opts.seed, opts.limits);
      const long long mu_slice = below.value;
      const std::uint64_t s_seed = below.steps.front().seed;
      out.push_back({InvariantName::Mu, mu_slice, Provenance::computed(s_seed, "vanishing Euler characteristic"),
                     "X∩p⁻¹(0)"});
      out.push_back({InvariantName::Mu, static_cast<long long>(md.value) - mu_slice,
                     Provenance::computed(md.seed, "Le-Greuel: m_d - mu(X∩p⁻¹(0))"), "X"});
    }
  }
  kv.set("input.count", static_cast<long long>(out.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    kv.add_invariant("input." + std::to_string(i), out[i]);
    h << render_human(out[i]) << "\n";
  }
  return render(kv, h.str(), opts.machine);
}

CommandOutput run_eu(const Document& doc, const RunOptions& opts) {
  EidsDescriptor x = build_descriptor(doc);
  EuResult r;
  try {
    r = eu_dispatch(x, opts.seed, doc.supplied, opts.limits);
  } catch (const MissingInput& e) {
    std::string msg = std::string("missing input ") + e.invariant() + ": " + e.what();
    auto rows = matching_rows(x, opts);
    if (rows.empty()) {
      msg += "; no corpus row supplies it, add a supplied.* field to the document";
    } else {
      msg += "; supplied by corpus row";
      for (const auto& row : rows) msg += " " + row;
    }
    throw MissingInput(e.invariant(), msg);
  }

  KeyValueReport kv;
  kv.set("command", "eu");
  kv.set("seed", static_cast<long long>(r.seed));
  kv.set("type", type_label(x));
  kv.set("N", static_cast<long long>(x.N()));
  kv.set("eu", r.value);
  kv.set("regime", std::string(to_string(r.regime)));
  kv.set("input.count", static_cast<long long>(r.inputs.size()));
  std::ostringstream h;
  h << "Eu_0(X) = " << r.value << "\n";
  h << "regime " << to_string(r.regime) << ", seed " << r.seed << "\n";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    kv.add_invariant("input." + std::to_string(i), r.inputs[i]);
    h << "  " << render_human(r.inputs[i]) << "\n";
  }
  for (const auto& step : r.derivation) h << "  " << step << "\n";
  return render(kv, h.str(), opts.machine);
}

CommandOutput run_corpus(const RunOptions& opts) {
  std::vector<CorpusEntry> corpus = load_corpus(opts.corpus_dir);
  KeyValueReport kv;
  kv.set("command", "corpus-run");
  kv.set("seed", static_cast<long long>(opts.seed));
  kv.set("work_budget", static_cast<long long>(opts.corpus_work));
  std::ostringstream h;
  std::size_t counts[4] = {0, 0, 0, 0};
  std::size_t unflagged_mismatch = 0;
  std::vector<std::string> ok_rows;
  std::size_t i = 0;
  for (const auto& entry : corpus) {
    bool row_ok = false;
    for (const auto& params : instantiations(entry)) {
      CorpusOutcome o;
      try {
        o = run_corpus_instance(entry, params, opts.seed, opts.limits, opts.corpus_work);
      } catch (const Error& e) {
        o.id = entry.id;
        o.type = entry.type;
        o.params = params;
        o.verdict = Verdict::Skipped;
        o.note = std::string(to_string(e.code())) + ": " + e.what();
      }
      ++counts[static_cast<int>(o.verdict)];
      if (o.verdict == Verdict::Mismatch && !entry.suspect) ++unflagged_mismatch;
      if (o.verdict == Verdict::Match || o.verdict == Verdict::SuppliedMatch) row_ok = true;

      const std::string p = "entry." + std::to_string(i++);
      kv.set(p + ".id", o.id);
      kv.set(p + ".type", o.type);
      kv.set(p + ".params", params_to_string(o.params));
      kv.set(p + ".verdict", std::string(to_string(o.verdict)));
      if (o.verdict != Verdict::Skipped) kv.set(p + ".printed_eu", o.printed_eu);
      if (o.eu) kv.set(p + ".eu", *o.eu);
      if (o.regime) kv.set(p + ".regime", std::string(to_string(*o.regime)));
      kv.set(p + ".input.count", static_cast<long long>(o.inputs.size()));
      for (std::size_t k = 0; k < o.inputs.size(); ++k)
        kv.add_invariant(p + ".input." + std::to_string(k), o.inputs[k]);
      if (!o.note.empty()) kv.set(p + ".note", o.note);

      h << o.id << " " << o.type;
      if (!o.params.empty()) h << " [" << params_to_string(o.params) << "]";
      h << ": " << to_string(o.verdict);
      if (o.eu) h << ", Eu " << *o.eu << " (printed " << o.printed_eu << ")";
      if (o.regime) h << ", " << to_string(*o.regime);
      if (!o.note.empty()) h << " -- " << o.note;
      h << "\n";
      if (opts.progress) {
        std::string line = o.id + " [" + params_to_string(o.params) + "] " + std::string(to_string(o.verdict));
        if (!o.note.empty()) line += " -- " + o.note;
        opts.progress(line);
      }
      for (const auto& in : o.inputs) h << "    " << render_human(in) << "\n";
    }
    if (row_ok) ok_rows.push_back(entry.id);
  }
  kv.set("summary.instances", static_cast<long long>(i));
  kv.set("summary.match", static_cast<long long>(counts[0]));
  kv.set("summary.supplied_match", static_cast<long long>(counts[1]));
  kv.set("summary.mismatch", static_cast<long long>(counts[2]));
  kv.set("summary.skipped", static_cast<long long>(counts[3]));
  kv.set("summary.unflagged_mismatch", static_cast<long long>(unflagged_mismatch));
  kv.set("summary.rows_ok", static_cast<long long>(ok_rows.size()));
  h << "\n" << i << " instances: " << counts[0] << " MATCH, " << counts[1] << " SUPPLIED-MATCH, " << counts[2]
    << " MISMATCH, " << counts[3] << " SKIPPED; " << ok_rows.size() << " rows confirmed; seed " << opts.seed
    << "\n";
  return render(kv, h.str(), opts.machine, unflagged_mismatch ? 2 : 0);
}

CommandOutput run_command(const std::string& command, const std::string& path, const RunOptions& opts) {
  try {
    if (command == "corpus-run") return run_corpus(opts);
    Document doc = load_document(path);
    if (command == "check") return run_check(doc, opts);
    if (command == "invariants") return run_invariants(doc, opts);
    if (command == "eu") return run_eu(doc, opts);
    return {2, "unknown command '" + command + "'\n", true};
  } catch (const Error& e) {
    std::string where = command == "corpus-run" ? "" : path + ": ";
    return {exit_code_for(e), "error: " + where + std::string(to_string(e.code())) + ": " + e.what() + "\n", true};
  }
}

}  // namespace eidsobs

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "eidsobs/cli/commands.hpp"
#include "eidsobs/cli/report.hpp"
#include "eidsobs/error.hpp"

namespace eidsobs {
namespace {

const char* kCone = "vars = x, y, z, w\nt = 2\nmatrix = [x, y, z; y, z, w]\n";

std::size_t syntax_position(std::string_view text) {
  try {
    build_descriptor(parse_document(text));
  } catch (const SyntaxError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no syntax error";
  return 0;
}

const char* kSmallCorpus = R"(
[entry]
id = S.01
table = 1
type = Ω_1
vars = x, y, z, w, v, u
t = 2
matrix = [x, y, v; z, w, u]
tau = 0
eu = 2
supplied.chi_tilde_slice = 1

[entry]
id = S.02
table = 1
type = Ω_k
vars = x, y, z, w, v, u
t = 2
matrix = [x, y, v; z, w, x+u^k]
conditions = k>=2
tau = k-1
eu = 2
supplied.chi_tilde_slice = 1

[entry]
id = S.03
table = 1
type = bad
vars = x, y, z, w, v, u
t = 2
matrix = [x, y, z; w, v, u^2+x^(k+1)+y^2]
conditions = k>=1
tau = k-2
eu = 1
flags = suspect
)";

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Document, ParsesFields) {
  Document d = parse_document(
      "# comment\nvars = x, y, z, w\nt = 2\nmatrix = [x, y, z; y, z, w^k]\nparams = k=3\nprojection = w\n"
      "supplied.chi_tilde_slice = -2\n");
  EXPECT_EQ(d.vars.size(), 4u);
  EXPECT_EQ(d.t, 2u);
  EXPECT_EQ(d.matrix.rows.size(), 2u);
  EXPECT_EQ(d.params.at("k"), 3);
  ASSERT_TRUE(d.projection);
  ASSERT_NE(d.supplied.find(InvariantName::ChiTilde, "slice"), nullptr);
  EXPECT_EQ(d.supplied.find(InvariantName::ChiTilde, "slice")->value, -2);
  EidsDescriptor x = build_descriptor(d);
  EXPECT_EQ(x.matrix()(1, 2).to_string(), "w^3");
}

TEST(Document, ErrorPositions) {
  std::string bad = "vars = x, y, z, w\nt = 2\nmatrix = [x, y, z; y, z w, x]\n";
  EXPECT_EQ(syntax_position(bad), bad.find("w, x]"));
  std::string unclosed = "vars = x, y\nt = 1\nmatrix = [x, (y]\n";
  EXPECT_GE(syntax_position(unclosed), unclosed.find("(y"));
  std::string ragged = "vars = x, y\nt = 1\nmatrix = [x, y; x]\n";
  EXPECT_EQ(syntax_position(ragged), ragged.find(" x]") + 1);
  std::string noeq = "vars = x\nt 2\n";
  EXPECT_EQ(syntax_position(noeq), noeq.find("t 2"));
  try {
    parse_document("vars = x\nt = 1\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("matrix"), std::string::npos);
  }
  EXPECT_THROW(parse_document(std::string(kCone) + "colour = red\n"), SyntaxError);
  EXPECT_THROW(parse_document(std::string(kCone) + "supplied.foo = 1\n"), SyntaxError);
}

TEST(Report, RoundTrip) {
  KeyValueReport kv;
  kv.set("eu", -1);
  kv.set("regime", "Smoothable");
  kv.add_invariant("input.0", {InvariantName::Nu, 1, Provenance::computed(7, "polar recursion"), "X"});
  kv.add_invariant("input.1", {InvariantName::ChiTilde, -3, Provenance::corpus("T1.04"), "slice"});
  KeyValueReport back = KeyValueReport::parse(kv.to_text());
  EXPECT_EQ(back.entries(), kv.entries());
  EXPECT_EQ(back.get_int("eu"), -1);
  EXPECT_EQ(back.get_int("input.0.seed"), 7);
  EXPECT_EQ(back.get_int("input.1.value"), -3);
  EXPECT_EQ(*back.get("input.1.row"), "T1.04");
  EXPECT_THROW(back.get_int("regime"), Error);
  EXPECT_THROW(KeyValueReport::parse("novalue\n"), SyntaxError);
}

TEST(Commands, CheckFourfold) {
  RunOptions opts;
  auto out = run_check(parse_document("vars = x, y, z, w, v, u\nt = 2\nmatrix = [x, y, v; z, w, x+u^2]\n"), opts);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_NE(out.text.find("determinantal (2,3,2), dim 4, IDS: yes, smoothable: no"), std::string::npos);
  auto cone = run_check(parse_document(kCone), opts);
  EXPECT_NE(cone.text.find("smoothable: yes"), std::string::npos);
}

TEST(Commands, CheckFailureExitCode) {
  RunOptions opts;
  auto out = run_check(parse_document("vars = x, y, z, w\nt = 2\nmatrix = [x, y, z; x, y, z]\n"), opts);
  EXPECT_EQ(out.exit_code, 2);
}

TEST(Commands, ExitCodes) {
  RunOptions opts;
  auto dir = temp_dir("eidsobs_cli_exit");
  std::ofstream(dir / "bad.eids") << "vars = x, y\nt = 1\nmatrix = [x, y*]\n";
  auto bad = run_command("check", (dir / "bad.eids").string(), opts);
  EXPECT_EQ(bad.exit_code, 4);
  EXPECT_TRUE(bad.error);
  EXPECT_NE(bad.text.find("position"), std::string::npos);
  EXPECT_EQ(run_command("check", (dir / "missing.eids").string(), opts).exit_code, 4);
  std::ofstream(dir / "cone.eids") << kCone;
  opts.limits = opts.limits.with_work_budget(1);
  EXPECT_EQ(run_command("eu", (dir / "cone.eids").string(), opts).exit_code, 3);
  EXPECT_EQ(exit_code_for(Error(ErrorCode::NotAGerm, "")), 2);
}

TEST(Commands, EuMachineOutputRoundTrips) {
  RunOptions opts;
  opts.machine = true;
  opts.seed = 2;
  auto out = run_eu(parse_document(kCone), opts);
  KeyValueReport kv = KeyValueReport::parse(out.text);
  EXPECT_EQ(kv.get_int("eu"), -1);
  EXPECT_EQ(*kv.get("regime"), "Smoothable");
  EXPECT_EQ(kv.get_int("seed"), 2);
  const long long n = kv.get_int("input.count");
  ASSERT_GT(n, 0);
  for (long long i = 0; i < n; ++i) {
    const std::string p = "input." + std::to_string(i);
    EXPECT_TRUE(kv.get(p + ".provenance"));
    kv.get_int(p + ".value");
  }
}

TEST(Commands, InvariantsAlongProjection) {
  RunOptions opts;
  opts.machine = true;
  auto out = run_invariants(
      parse_document("vars = x, y, z, w\nt = 2\nmatrix = [z, y+w, x; w, x, y]\nprojection = w\n"), opts);
  KeyValueReport kv = KeyValueReport::parse(out.text);
  long long md = 0, mu = 0, mu_slice = 0;
  for (long long i = 0; i < kv.get_int("input.count"); ++i) {
    const std::string p = "input." + std::to_string(i);
    const std::string name = *kv.get(p + ".name");
    const std::string subject = *kv.get(p + ".subject");
    if (name == "md") md = kv.get_int(p + ".value");
    if (name == "mu" && subject == "X") mu = kv.get_int(p + ".value");
    if (name == "mu" && subject != "X") mu_slice = kv.get_int(p + ".value");
  }
  EXPECT_EQ(md, 3);
  EXPECT_EQ(mu_slice, 2);
  EXPECT_EQ(mu, 1);
}

TEST(Corpus, ParseAndInstantiate) {
  auto entries = parse_corpus(kSmallCorpus);
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[1].params.size(), 1u);
  auto inst = instantiations(entries[1]);
  ASSERT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst[0].at("k"), 2);
  EXPECT_EQ(inst[1].at("k"), 3);
  Document d = instantiate(entries[1], inst[1]);
  EXPECT_EQ(build_descriptor(d).matrix()(1, 2).to_string(), "u^3 + x");
  const auto* chi = d.supplied.find(InvariantName::ChiTilde, "slice");
  ASSERT_NE(chi, nullptr);
  EXPECT_EQ(chi->provenance.kind, Provenance::Kind::Corpus);
  EXPECT_EQ(chi->provenance.row, "S.02");
  EXPECT_THROW(parse_corpus("[entry]\nid = a\n"), SyntaxError);
  EXPECT_THROW(parse_corpus("[entry]\nid = a\nflags = odd\n"), SyntaxError);
}

TEST(Corpus, EmbeddedTables) {
  auto all = load_corpus();
  EXPECT_GE(all.size(), 20u);
  bool suspect = false, exempt = false;
  for (const auto& e : all) {
    suspect = suspect || e.suspect;
    exempt = exempt || e.parse_exempt;
    if (e.parse_exempt) continue;
    for (const auto& p : instantiations(e)) EXPECT_NO_THROW(build_descriptor(instantiate(e, p))) << e.id;
  }
  EXPECT_TRUE(suspect);
  EXPECT_TRUE(exempt);
  EXPECT_EQ(all.front().table, 1);
  EXPECT_EQ(all.back().table, 2);
}

TEST(Corpus, SuspectRowIsSkippedWithNote) {
  auto entries = parse_corpus(kSmallCorpus);
  auto o = run_corpus_instance(entries[2], instantiations(entries[2])[0], 0, {}, kDefaultCorpusWork);
  EXPECT_EQ(o.verdict, Verdict::Skipped);
  EXPECT_NE(o.note.find("suspect"), std::string::npos);
}

TEST(Corpus, RunIsDeterministic) {
  auto dir = temp_dir("eidsobs_cli_corpus");
  std::ofstream(dir / "small.corpus") << kSmallCorpus;
  RunOptions opts;
  opts.machine = true;
  opts.corpus_dir = dir.string();
  auto a = run_corpus(opts);
  auto b = run_corpus(opts);
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(a.exit_code, 0);
  KeyValueReport kv = KeyValueReport::parse(a.text);
  EXPECT_EQ(kv.get_int("summary.instances"), 5);
  EXPECT_EQ(kv.get_int("summary.mismatch"), 0);
  EXPECT_EQ(kv.get_int("summary.skipped"), 2);
  EXPECT_EQ(kv.get_int("summary.rows_ok"), 2);
  EXPECT_EQ(*kv.get("entry.0.verdict"), "MATCH");
}

TEST(Corpus, WrongPrintedValueIsAMismatch) {
  std::string text = kSmallCorpus;
  text.replace(text.find("eu = 2"), 6, "eu = 5");
  auto dir = temp_dir("eidsobs_cli_mismatch");
  std::ofstream(dir / "small.corpus") << text;
  RunOptions opts;
  opts.corpus_dir = dir.string();
  auto out = run_corpus(opts);
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_NE(out.text.find("MISMATCH"), std::string::npos);
}

}  // namespace eidsobs

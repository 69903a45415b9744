#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "app.hpp"
#include "oracles.hpp"
#include "problem.hpp"
#include "report.hpp"

using namespace srtor;
using namespace srtor::cli;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kCorpus{"wps12.tcx",    "wps123.tcx", "cp1xcp1.tcx",  "prod1212.tcx",
                                       "cut_k1.tcx",   "cut_k2.tcx", "interval.tcx", "not_locally_free.tcx"};

}  // namespace

TEST(Parse, ProductOfWeightedLines) {
  const ProblemSpec p = parse_problem("m = 4\nfaces = {1 2} {2 3} {3 4} {1 4}\nB = [1 0 -2 0 ; 0 2 0 -1]");
  EXPECT_EQ(p.complex.vertex_count(), 4u);
  EXPECT_EQ(p.complex.maximal_faces().size(), 4u);
  ASSERT_TRUE(p.subgroup);
  EXPECT_EQ(p.subgroup->matrix(), (IntMatrix{{1, 0, -2, 0}, {0, 2, 0, -1}}));
}

TEST(Parse, WeightedLine) {
  const ProblemSpec p = parse_problem("m = 2\nfaces = {1} {2}\nB = [2 -1]");
  EXPECT_EQ(p.subgroup->n(), 1u);
  EXPECT_EQ(p.subgroup->matrix()(0, 1), -1);
}

TEST(Parse, CommentsFormsAndContinuations) {
  const ProblemSpec p = parse_problem(
      "# header\n\nm = 4   # vertices\nfaces = {1 2} {2 3}\n        {3 4} {1 4}\nB = [1 0 -1 0 ;\n     0 1 0 -1]\n"
      "form u3 = x2 + x3 - x4\nform w = -2*x1 \xE2\x88\x92 x3\n");
  EXPECT_EQ(p.complex.maximal_faces().size(), 4u);
  ASSERT_EQ(p.forms.size(), 2u);
  EXPECT_EQ(p.find_form("u3")->coefficients(), (IntVector{0, 1, 1, -1}));
  EXPECT_EQ(p.find_form("w")->coefficients(), (IntVector{-2, 0, -1, 0}));
  EXPECT_EQ(p.find_form("nope"), nullptr);
}

TEST(Parse, ErrorsCarryLocations) {
  auto location = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(location("m = 2\nfaces = {1 3}"), (std::pair<std::size_t, std::size_t>{2, 12}));
  EXPECT_EQ(location("m = 2\nm = 3\nfaces = {1}"), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(location("m = 2\nfaces = {1} {2} junk"), (std::pair<std::size_t, std::size_t>{2, 17}));
  EXPECT_EQ(location("m = 2\nfaces = {1 2\n"), (std::pair<std::size_t, std::size_t>{2, 13}));
  EXPECT_EQ(location("m = 2\nfaces = {1}\nB = [1 2 ; 3]"), (std::pair<std::size_t, std::size_t>{3, 12}));
  EXPECT_EQ(location("m = 2\nfaces = {1}\nform a = x1 + x9"), (std::pair<std::size_t, std::size_t>{3, 15}));
  EXPECT_EQ(location("m = 2\nfaces = {1}\nform a = x1\nform a = x2"), (std::pair<std::size_t, std::size_t>{4, 1}));
  EXPECT_EQ(location("m = 2\nfaces = {1}\ncolour = 3"), (std::pair<std::size_t, std::size_t>{3, 1}));
  EXPECT_EQ(location("m = 2\nfaces = {1 1}"), (std::pair<std::size_t, std::size_t>{2, 12}));
  EXPECT_THROW(parse_problem("faces = {1}"), ParseError);
  EXPECT_THROW(parse_problem("m = 2\nfaces = {1}\nB = [1 2 ; 2 4]"), ParseError);
  try {
    parse_problem("m = 2\nfaces = {1 3}");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(Parse, RoundTripOnCorpus) {
  for (const auto& name : kCorpus) {
    const ProblemSpec p = load_problem(oracle::data_path(name));
    const std::string text = render_problem(p);
    EXPECT_TRUE(parse_problem(text) == p) << name << "\n" << text;
    EXPECT_EQ(render_problem(parse_problem(text)), text);
  }
}

TEST(Cli, TorTableWeightedLine) {
  const RunResult r = run_cli({"tor", "--input", oracle::data_path("wps12.tcx"), "--max-degree", "8", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["command"], "tor");
  EXPECT_EQ(doc["max_degree"], 8);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "input", "max_degree", "result"}));
  const auto entries = doc["result"]["entries"];
  bool found = false;
  for (const auto& e : entries) {
    EXPECT_EQ(e["p"], 0);
    if (e["j"] == 4) {
      found = true;
      EXPECT_EQ(e.dump(), R"({"p":0,"j":4,"q":4,"rank":0,"torsion":[2]})");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, EmptyTable) {
  const RunResult r = run_cli({"tor", "--input", oracle::data_path("wps12.tcx"), "--max-degree", "0", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["result"]["entries"].size(), 1u);
  BigradedTor empty(1, 4);
  EXPECT_EQ(srtor::cli::tor_entries_json(empty).dump(), R"({"entries":[]})");
}

TEST(Cli, BigCmFailureIsAResultNotAnError) {
  const RunResult r = run_cli({"check-bigcm", "--input", oracle::data_path("prod1212.tcx")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("FAILS: witness at (p=1, j=", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("cycle"), std::string::npos);
  const RunResult j = run_cli({"check-bigcm", "--input", oracle::data_path("prod1212.tcx"), "--json"});
  const auto doc = nlohmann::ordered_json::parse(j.out);
  EXPECT_EQ(doc["result"]["status"], "FAILS");
  EXPECT_TRUE(doc["result"].contains("witness"));
  EXPECT_EQ(doc["result"]["regular_sequence"]["status"], "FAILS");
}

TEST(Cli, LocalFreenessReportsDeterminants) {
  const RunResult r = run_cli({"check-local-free", "--input", oracle::data_path("prod1212.tcx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
  EXPECT_NE(r.out.find("det B{2 3} = 4"), std::string::npos) << r.out;
  const RunResult bad = run_cli({"check-local-free", "--input", oracle::data_path("not_locally_free.tcx")});
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(bad.out.rfind("FAIL", 0), 0u);
}

TEST(Cli, JsonIsDeterministic) {
  for (const char* cmd : {"tor", "check-free", "gysin", "hilbert"}) {
    const std::vector<std::string> args{cmd, "--input", oracle::data_path("prod1212.tcx"), "-D", "8", "--json"};
    const RunResult a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, 0) << cmd << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"tor", "--input", "/nonexistent.tcx"}).code, kInputError);
  EXPECT_EQ(run_cli({"tor"}).code, kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kInputError);
  EXPECT_EQ(run_cli({"tor", "--input", oracle::data_path("wps12.tcx"), "-D", "7"}).code, kInputError);
  EXPECT_EQ(run_cli({"gkm", "--input", oracle::data_path("wps123.tcx"), "--element", "x1^"}).code, kInputError);
  EXPECT_EQ(run_cli({"gkm", "--input", oracle::data_path("not_locally_free.tcx"), "--element", "x1"}).code,
            kInputError);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
  for (const auto& name : kCorpus)
    EXPECT_EQ(run_cli({"check-free", "--input", oracle::data_path(name)}).code, kOk) << name;
}

TEST(Cli, MalformedFileReportsLocation) {
  const RunResult r = run_cli({"tor", "--input", oracle::data_path("malformed.tcx")});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("malformed.tcx:3:"), std::string::npos) << r.err;
}

TEST(Cli, FindTorsionWithNamedForm) {
  const RunResult r = run_cli(
      {"find-torsion", "--input", oracle::data_path("cp1xcp1.tcx"), "--extra", "u3", "--vertex", "{1 2}", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["result"]["g_text"], "u3 - u2");
  EXPECT_EQ(doc["result"]["f"], "x1*x2");
  EXPECT_EQ(doc["result"]["verified"], true);
  const RunResult inline_form = run_cli(
      {"find-torsion", "--input", oracle::data_path("cp1xcp1.tcx"), "--extra", "x2 + x3 - x4", "--vertex", "1,2"});
  EXPECT_EQ(inline_form.code, 0) << inline_form.err;
}

TEST(Cli, OtherCommandsRun) {
  const std::string cp = oracle::data_path("cp1xcp1.tcx");
  EXPECT_EQ(run_cli({"gkm", "--input", cp, "--element", "x1*x2"}).code, 0);
  EXPECT_EQ(run_cli({"annihilate", "--input", oracle::data_path("prod1212.tcx"), "--element", "x2*x3^2", "-D", "4"})
                .code,
            0);
  EXPECT_EQ(run_cli({"check-connected", "--input", cp}).out.rfind("true", 0), 0u);
  EXPECT_EQ(run_cli({"check-regular", "--input", cp}).code, 0);
  EXPECT_EQ(run_cli({"tor", "--input", cp, "--rational"}).code, 0);
  const RunResult g = run_cli({"gysin", "--input", cp, "--split", "1", "-D", "6"});
  EXPECT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(run_cli({"gysin", "--input", cp, "--split", "3"}).code, kInputError);
}

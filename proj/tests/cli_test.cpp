#include "cli.h"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pasp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PASP_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, SolveTextOutput) {
  const Invocation r = run({"solve", data("airport.pasp")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "semantics: new\ngrid: {0, 0.1, 0.5, 0.9, 1}\nanswer set 1: {airport^0.9, invalid^0.1}\ncount: 1\n");
  EXPECT_NE(r.err.find("note: answer sets are enumerated on the certainty grid"), std::string::npos);
}

TEST(Cli, SolveJsonSchema) {
  const Invocation r = run({"solve", data("strong.pasp"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["semantics"], "strong");
  EXPECT_TRUE(doc["grid"].is_array());
  EXPECT_EQ(doc["count"], 2);
  ASSERT_EQ(doc["answer_sets"].size(), 2u);
  const auto& first = doc["answer_sets"][0];
  EXPECT_EQ(first["consistent"], true);
  EXPECT_EQ(first["entries"][0]["key"], "a");
  EXPECT_EQ(first["entries"][0]["value"], "0.8");
}

TEST(Cli, ClassicalHasNoGrid) {
  const Invocation r = run({"solve", data("choice.pasp"), "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["semantics"], "classical");
  EXPECT_TRUE(doc["grid"].is_null());
  EXPECT_EQ(doc["count"], 2);
}

TEST(Cli, ExplicitSemanticsAndGrid) {
  Invocation r = run({"solve", data("airport.pasp"), "--semantics", "baseline"});
  EXPECT_NE(r.out.find("{invalid^0.1}"), std::string::npos);
  r = run({"solve", data("extras.pasp"), "--semantics", "new", "--grid", "0,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("count: 0"), std::string::npos);
  r = run({"solve", data("extras.pasp"), "--semantics", "new", "--grid", "0,1/2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{a^0.5}"), std::string::npos);
  r = run({"solve", data("extras.pasp"), "--grid", "0,x"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, InconsistentAnswerSetsAreMarked) {
  const Invocation r = run({"solve", data("simple.pasp") + "", "--semantics", "new"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in("0.3: a.\n0.6: -a.\n");
  auto* old = std::cin.rdbuf(in.rdbuf());
  const Invocation s = run({"solve", "-", "--semantics", "new"});
  std::cin.rdbuf(old);
  EXPECT_EQ(s.code, 1);
  EXPECT_NE(s.out.find("(inconsistent)"), std::string::npos);
}

TEST(Cli, QueriesExitWithTheAnswer) {
  Invocation r = run({"brave", data("scada.pasp"), "--query", "lowyeast | lowtemp"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run({"brave", data("scada.pasp"), "--query", "brew"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "false\n");
  r = run({"cautious", data("clausal.pasp"), "--query", "e @ 0.6", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["mode"], "cautious");
  EXPECT_EQ(doc["level"], "0.6");
  EXPECT_EQ(doc["result"], true);
  r = run({"cautious", data("clausal.pasp"), "--query", "e", "--level", "0.7"});
  EXPECT_EQ(r.code, 1);
  r = run({"brave", data("scada.pasp")});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ExistsAndQbfReduction) {
  Invocation r = run({"reduce-qbf", data("phi.qbf")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(":- not sat."), std::string::npos);
  std::istringstream in(r.out);
  auto* old = std::cin.rdbuf(in.rdbuf());
  const Invocation e = run({"exists", "-"});
  std::cin.rdbuf(old);
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "yes\n");
  r = run({"reduce-qbf", data("phi_prime.qbf"), "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc.contains("qbf"));
  EXPECT_TRUE(doc.contains("program"));
}

TEST(Cli, CheckClassifies) {
  const Invocation r = run({"check", data("scada.pasp"), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["mode"], "clausal");
  EXPECT_EQ(doc["kind"], "clausal");
  EXPECT_EQ(doc["rules"], 14);
  EXPECT_EQ(doc["atoms"], 14);
  EXPECT_EQ(doc["constraints"], true);
  EXPECT_EQ(doc["semantics"], "weak");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"solve", data("missing.pasp")}).code, 2);
  EXPECT_EQ(run({"solve", data("airport.pasp"), "--semantics", "odd"}).code, 2);
  EXPECT_EQ(run({"solve", data("airport.pasp"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"solve", data("scada.pasp"), "--semantics", "strong"}).code, 2);
}

TEST(Cli, ParseErrorsReportThePosition) {
  std::istringstream in("a.\nb :- .\n");
  auto* old = std::cin.rdbuf(in.rdbuf());
  const Invocation r = run({"solve", "-"});
  std::cin.rdbuf(old);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("-:2:6: ", 0), 0u) << r.err;
}

TEST(Cli, CapsExitWithThree) {
  EXPECT_EQ(run({"solve", data("simple.pasp"), "--max-atoms", "3"}).code, 3);
  ::setenv("PASP_MAX_ATOMS", "3", 1);
  const Invocation r = run({"solve", data("simple.pasp")});
  ::unsetenv("PASP_MAX_ATOMS");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("instance too large"), std::string::npos);
  EXPECT_EQ(run({"solve", data("simple.pasp")}).code, 0);
}

TEST(Cli, Help) {
  const Invocation r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

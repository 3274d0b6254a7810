#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "dissalpha/graph6.hpp"
#include "dissalpha/isomorphism.hpp"
#include "dissalpha/named_graphs.hpp"
#include "test_support.hpp"

using namespace dissalpha;
using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run sh(const std::string& cmd) {
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string cli() { return std::string("'") + DISSALPHA_CLI + "'"; }

std::vector<json> json_lines(const std::string& s) {
  std::vector<json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, SolveK4) {
  auto r = sh("echo 'C~' | " + cli() + " solve");
  ASSERT_EQ(r.status, 0);
  auto j = json_lines(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["alpha"], 1);
  EXPECT_EQ(j[0]["diss"], 2);
}

TEST(Cli, GenFig3ThenSolve) {
  auto r = sh(cli() + " gen fig3 | " + cli() + " solve");
  ASSERT_EQ(r.status, 0);
  auto j = json_lines(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["alpha"], 6);
  EXPECT_EQ(j[0]["diss"], 10);
}

TEST(Cli, EmptyInput) {
  auto r = sh("printf '' | " + cli() + " solve");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, ParseErrorsDoNotStopTheStream) {
  auto r = sh("printf 'C~\\nnot-a-graph\\nDhc\\n' | " + cli() + " solve --what alpha");
  ASSERT_EQ(r.status, 0);
  auto j = json_lines(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[1]["status"], "parse_error");
  EXPECT_EQ(j[1]["line"], 2);
  EXPECT_EQ(j[2]["alpha"], 2);
}

TEST(Cli, GenCliqueRing) {
  auto r = sh(cli() + " gen Gkl --k 2 --l 2");
  ASSERT_EQ(r.status, 0);
  auto g = parse_graph6(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.min_degree(), 4u);
  EXPECT_EQ(g.max_degree(), 4u);
}

TEST(Cli, ExpandWitness) {
  auto w = (testsupport::witness_dir() / "fig3.json").string();
  auto r = sh(cli() + " expand --witness '" + w + "'");
  ASSERT_EQ(r.status, 0);
  auto g = parse_graph6(r.out.substr(0, r.out.find('\n')));
  EXPECT_TRUE(is_isomorphic(g, named_graph("fig3").graph));
}

TEST(Cli, RecognizeAndBounds) {
  auto r = sh(cli() + " gen fig2_left | " + cli() + " recognize --family calG");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(json_lines(r.out)[0]["member"].get<bool>());
  auto b = sh(cli() + " gen petersen | " + cli() + " bounds");
  ASSERT_EQ(b.status, 0);
  EXPECT_FALSE(json_lines(b.out)[0]["report"]["proven_violation"].get<bool>());
}

TEST(Cli, SurveyExhaustive) {
  auto r = sh(cli() + " survey --exhaustive-upto 5 --subcubic");
  ASSERT_EQ(r.status, 0);
  auto j = json_lines(r.out);
  EXPECT_EQ(j.back()["type"], "summary");
  EXPECT_EQ(j.back()["records"], 1 + 1 + 2 + 6 + 10);
}

TEST(Cli, MonteCarloSeedsReproduce) {
  auto cmd = cli() + " gen petersen | " + cli() + " montecarlo --trials 2000 --seed 5";
  auto a = sh(cmd), b = sh(cmd);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json_lines(a.out)[0]["result"]["exact_expectation"], "1/2");
}

TEST(Cli, Selftest) { EXPECT_EQ(sh(cli() + " selftest > /dev/null").status, 0); }

TEST(Cli, UnknownFamilyOrFlag) {
  EXPECT_NE(sh(cli() + " gen nosuchfamily 2>/dev/null").status, 0);
  EXPECT_NE(sh(cli() + " solve --bogus 2>/dev/null").status, 0);
  EXPECT_NE(sh(cli() + " recognize --family nope 2>/dev/null < /dev/null").status, 0);
}

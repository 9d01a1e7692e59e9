#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "netop/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = netop::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NETOP_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::string(::testing::TempDir()) + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ComposeNineNode) {
  const auto r = run({"compose", data("nine_node.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = netop::json::parse(r.out);
  EXPECT_EQ(j["result"]["n"], 9);
  EXPECT_EQ(j["result"]["payload"],
            netop::json::parse("[[1,2],[2,3],[3,6],[4,5],[5,6],[6,7],[8,9]]"));
  // The emitted network re-parses to itself.
  EXPECT_EQ(netop::to_json(netop::network_from_json(j["result"])), j["result"]);
}

TEST(Cli, ComposeRangeLimited) {
  const auto r = run({"compose", data("range_limited.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = netop::json::parse(r.out);
  EXPECT_EQ(j["result"]["payload"], netop::json::parse("[[1,2],[3,4]]"));
  EXPECT_EQ(j["attributes"].size(), 4u);
  const auto dot = run({"compose", data("range_limited.json"), "--out", "dot"});
  EXPECT_EQ(dot.out.find("2 -- 3"), std::string::npos);
  EXPECT_NE(dot.out.find("1 -- 2"), std::string::npos);
}

TEST(Cli, ComposeEchoesWithoutTree) {
  const auto path = write_temp("echo.json", R"({"model":"sg","networks":{"a":{"n":3,"payload":[[1,3]]}}})");
  const auto r = run({"compose", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(netop::json::parse(r.out)["result"]["payload"], netop::json::parse("[[1,3]]"));
}

TEST(Cli, ComposeNamesTheBadNode) {
  const auto path = write_temp("bad.json", R"({
    "model": "sg",
    "networks": {"a": {"n": 2, "payload": []}, "b": {"n": 3, "payload": []}},
    "operations": {"u": {"profile": [2, 2]}},
    "compose": {"op": "u", "args": ["a", {"op": "u", "args": ["a", "b"]}]}
  })");
  const auto r = run({"compose", path});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("compose.args[1]"), std::string::npos) << r.err;
  const auto missing = write_temp("missing.json", R"({"model":"sg","compose":"nope"})");
  EXPECT_NE(run({"compose", missing}).err.find("unknown network 'nope'"), std::string::npos);
  EXPECT_EQ(run({"compose", "/nonexistent.json"}).code, 2);
}

TEST(Cli, ComposeDegreeRule) {
  const auto path = write_temp("degree.json", R"({
    "model": "sg",
    "rule": {"rule": "degree", "k": 1},
    "networks": {"a": {"n": 3, "payload": []}},
    "operations": {"f": {"profile": [3], "g": "e12 e13"}},
    "compose": {"op": "f", "args": ["a"]}
  })");
  const auto r = run({"compose", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(netop::json::parse(r.out)["result"]["payload"], netop::json::parse("[[1,2]]"));
}

TEST(Cli, Normalize) {
  auto r = run({"normalize", "e34 e12", "--graph", "kneser:4"});
  EXPECT_EQ(r.out, "e12 e34\n");
  EXPECT_EQ(r.code, 1);
  r = run({"normalize", "e12 e34", "--graph", "kneser:4"});
  EXPECT_EQ(r.out, "e12 e34\n");
  EXPECT_EQ(r.code, 0);
  r = run({"normalize", "", "--graph", "kneser:4"});
  EXPECT_EQ(r.out, "\n");
  EXPECT_EQ(r.code, 0);
  r = run({"normalize", "e12 e13 e12", "--graph", "kneser:4", "--variety", "gmon"});
  EXPECT_EQ(r.out, "e12 e13\n");
  r = run({"normalize", "c2 c1:2 c1", "--graph", "edges:2:1-2", "--monoid", "nat-add"});
  EXPECT_EQ(r.out, "c1:3 c2:1\n");
  r = run({"normalize", "e12", "--graph", "kneser:4", "--monoid", "nat-add", "--variety", "gmon"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("non-graphic"), std::string::npos);
  EXPECT_EQ(run({"normalize", "e19", "--graph", "kneser:4"}).code, 2);
  EXPECT_EQ(run({"normalize", "e12", "--graph", "grid:4"}).code, 2);
}

TEST(Cli, Petri) {
  auto r = run({"petri", data("catalyst_transport.petri"), "catalysts"});
  EXPECT_EQ(r.out, "a b\n");
  r = run({"petri", data("token_game.petri"), "fire", "--marking", "2a+b", "tau1"});
  EXPECT_EQ(r.out, "a+c\n");
  r = run({"petri", data("token_game.petri"), "fire", "--marking", "2a+b", "tau1", "tau2"});
  EXPECT_EQ(r.out, "a+c\na+2b\n");
  r = run({"petri", data("token_game.petri"), "reach", "--marking", "0", "--depth", "3"});
  EXPECT_EQ(r.out, "0\n");
  r = run({"petri", data("token_game.petri"), "fire", "--marking", "b", "tau1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not enabled"), std::string::npos);
  r = run({"petri", data("token_game.petri"), "reach", "--marking", "2a+b", "--depth", "2",
           "--format", "json"});
  const auto j = netop::json::parse(r.out);
  EXPECT_EQ(j["markings"].size(), 3u);
  r = run({"petri", data("token_game.petri"), "dot"});
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Cli, Check) {
  auto r = run({"check", "--suite", "models", "--cases", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS sg equations (0 cases)"), std::string::npos);
  EXPECT_NE(r.out.find("PASS models:"), std::string::npos);
  r = run({"check", "--suite", "operad", "--cases", "100", "--inject-fault", "skip-action"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL operad laws over sg"), std::string::npos);
  EXPECT_NE(r.out.find("case "), std::string::npos);
  // Identical invocations print identical output.
  EXPECT_EQ(run({"check", "--suite", "petri", "--cases", "30", "--seed", "4"}).out,
            run({"check", "--suite", "petri", "--cases", "30", "--seed", "4"}).out);
  EXPECT_EQ(run({"check", "--suite", "nope"}).code, 2);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("compose"), std::string::npos);
  EXPECT_EQ(r.out.find("inject-fault"), std::string::npos);
}

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "niemytzki/json_io.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = niemytzki::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

niemytzki::Json json_of(std::vector<std::string> args) {
  args.push_back("--json");
  const Invocation r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return niemytzki::Json::parse(r.out);
}

}  // namespace

TEST(Cli, ClassifyBernstein) {
  const auto j = json_of({"classify", "--dimension", "3", "--set", "bernstein"});
  EXPECT_EQ(j["properties"]["lindelof"], "true");
  EXPECT_EQ(j["properties"]["perfect"], "false");
  const Invocation human = run({"classify", "--dimension", "3", "--set", "bernstein"});
  EXPECT_NE(human.out.find("lindelof: true"), std::string::npos);
  EXPECT_NE(human.out.find("perfect: false"), std::string::npos);
}

TEST(Cli, ConvergeTangentCircle) {
  const auto j = json_of({"converge", "--family", "tangent-circle((0);1)", "--topology", "niemytzki"});
  EXPECT_FALSE(j["converges"].get<bool>());
  EXPECT_EQ(j["blocking_neighborhood"]["kind"], "tangent-ball");
  EXPECT_EQ(j["discreteness_radii"].size(), 100u);
  EXPECT_TRUE(j["certificate_verified"].get<bool>());
  const auto e = json_of({"converge", "--family", "tangent-circle((0);1)", "--topology", "euclidean"});
  EXPECT_TRUE(e["converges"].get<bool>());
}

TEST(Cli, MemberCantor) {
  const Invocation r = run({"member", "--dimension", "2", "--set", "cantor", "--point", "1/4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "in\n");
  EXPECT_EQ(json_of({"member", "--set", "cantor", "--point", "1/2"})["member"], "out");
}

TEST(Cli, Nbhd) {
  const auto j = json_of({"nbhd", "--topology", "modified", "--set", "rationals", "--point", "1/2,0"});
  EXPECT_EQ(j["neighborhood"]["kind"], "half-ball");
  EXPECT_EQ(run({"nbhd", "--point", "0,0", "--eps", "1/3"}).out, "tangent-ball center=(0,0) radius=1/3\n");
}

TEST(Cli, CompareAndExplain) {
  EXPECT_EQ(json_of({"compare", "--set-a", "empty", "--set-b", "all"})["order"], "finer");
  const auto j = json_of({"explain", "--set", "bernstein", "--property", "lindelof"});
  EXPECT_EQ(j["trace"].back()["rule"], "R4");
  const Invocation human = run({"explain", "--set", "bernstein", "--property", "lindelof"});
  EXPECT_NE(human.out.find("do not contain uncountable compacta"), std::string::npos);
}

TEST(Cli, Check) {
  const auto j = json_of({"check", "--suite", "S4", "--samples", "200", "--dimension", "3"});
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["samples"], 200);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"classify"}).code, 1);
  EXPECT_EQ(run({"classify", "--dimension", "1", "--set", "all"}).code, 1);
  EXPECT_EQ(run({"check", "--suite", "S42"}).code, 1);
  EXPECT_EQ(run({"explain", "--set", "all", "--property", "nonexistent"}).code, 1);
  EXPECT_EQ(run({"classify", "--set", "cantor |"}).code, 2);
  EXPECT_EQ(run({"member", "--set", "cantor", "--point", "1,2"}).code, 2);
  EXPECT_EQ(run({"classify", "--dimension", "3", "--set", "point(1)"}).code, 2);
  EXPECT_EQ(run({"nbhd", "--topology", "modified", "--set", "bernstein", "--point", "0,0"}).code, 4);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, HumanAndJsonAgree) {
  const Invocation human = run({"classify", "--set", "rationals | cantor"});
  const auto j = json_of({"classify", "--set", "rationals | cantor"});
  for (auto it = j["properties"].begin(); it != j["properties"].end(); ++it) {
    const std::string value = it->is_string() ? it->get<std::string>() : it->dump();
    EXPECT_NE(human.out.find(it.key() + ": " + value + "\n"), std::string::npos) << it.key();
  }
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"classify", "--set", "!(cantor | lattice)", "--json"},
        std::vector<std::string>{"compare", "--set-a", "cantor", "--set-b", "cball(0;2)", "--json"},
        std::vector<std::string>{"check", "--suite", "S7", "--samples", "100", "--json"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

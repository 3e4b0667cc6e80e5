#include <gtest/gtest.h>

#include <sstream>

#include "fcat_cli/cli.hpp"
#include "fcat_cli/fixtures.hpp"

using fcat::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), {"--workspace", FCAT_DATA_DIR});
  std::ostringstream out;
  std::ostringstream err;
  const int code = fcat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ValidateBundledDeltaOp) {
  const Result r = run({"validate", "delta-op-3.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["kind"], "category");
  EXPECT_EQ(j["objects"], 4);
  EXPECT_EQ(j["morphisms"], 121);
}

TEST(Cli, PreorderOfParallelPair) {
  const Result r = run({"preorder", "parallel-pair.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["elements"], Json::array({"a", "b"}));
  EXPECT_EQ(j["leq"], Json::parse(R"([["a","a"],["a","b"],["b","b"]])"));
}

TEST(Cli, ColimitFixturePrintsEmptyComponent) {
  const Result r = run({"fixtures", "examples-colimit"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  bool found = false;
  for (const auto& a : j["fixtures"][0]["assertions"])
    if (a["detail"].contains("counterexample")) {
      EXPECT_EQ(a["detail"]["counterexample"]["source"]["sets"]["0"], Json::array());
      EXPECT_EQ(a["detail"]["counterexample"]["target"]["sets"]["0"], Json::array({"y"}));
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Cli, AllFixturesPass) {
  const Result r = run({"fixtures", "all"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(Json::parse(r.out)["fixtures"].size(), fcat::cli::fixture_names().size());
}

TEST(Cli, FalsifyReportsCounterexample) {
  const Result r = run({"eprime-falsify", "colimit-phi.json", "--probes", "colimit-probes.json"});
  EXPECT_EQ(r.code, 2);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["counterexample"]["pulled_back"]["components"]["0"], Json::array());
  const Result pass = run({"eprime-falsify", "colimit-phi.json", "--probes", "colimit-probes.json",
                           "--probe-cap", "0"});
  EXPECT_EQ(pass.code, 0);
  EXPECT_TRUE(Json::parse(pass.out).contains("banner"));
}

TEST(Cli, MembershipVerbs) {
  EXPECT_EQ(Json::parse(run({"in-ei", "colimit-phi.json"}).out)["in_E_I"], true);
  EXPECT_EQ(Json::parse(run({"in-mi", "colimit-phi.json"}).out)["in_M_I"], false);
  EXPECT_EQ(Json::parse(run({"in-m", "colimit-M.json"}).out)["in_subcategory"], false);
  const Json refl = Json::parse(run({"reflect", "colimit-M.json"}).out);
  EXPECT_EQ(refl["object"]["sets"]["0"].size(), 1u);
  EXPECT_EQ(refl["object"]["sets"]["1"].size(), 1u);
}

TEST(Cli, KanVerbs) {
  const Result r = run({"ran", "T0.json", "--along", "delta0-to-delta3.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["shape"], "delta-op:3");
  EXPECT_EQ(j["sets"]["[2]"].size(), 27u);
  const Result back = run({"restrict", "delta-op-3-point.json", "--along", "delta0-to-delta3.json"});
  ASSERT_EQ(back.code, 0) << back.err;
  const Json restricted = Json::parse(back.out);
  EXPECT_EQ(restricted["shape"], "delta-op:0");
  EXPECT_EQ(restricted["sets"]["[0]"].size(), 1u);
  const Result wrong = run({"restrict", "T0.json", "--along", "delta0-to-delta3.json"});
  EXPECT_EQ(wrong.code, 1);
}

TEST(Cli, NerveRoundTrip) {
  const Result n = run({"nerve", "two.json"});
  ASSERT_EQ(n.code, 0);
  const Json nerve = Json::parse(n.out);
  EXPECT_EQ(nerve["sets"]["[3]"].size(), 5u);
}

TEST(Cli, Errors) {
  const Result unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_EQ(Json::parse(unknown.err)["error"], "UnknownVerb");
  const Result fixture = run({"fixtures", "nope"});
  EXPECT_EQ(fixture.code, 1);
  EXPECT_EQ(Json::parse(fixture.err)["error"], "UnknownFixture");
  const Result missing = run({"validate", "no-such-file.json"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(Json::parse(missing.err)["error"], "MalformedInput");
}

TEST(Cli, MalformedInputCarriesPointer) {
  const Result r = run({"validate", "malformed-functor.json"});
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.err);
  EXPECT_EQ(j["error"], "MalformedInput");
  EXPECT_EQ(j["pointer"], "/maps/u/1");
}

TEST(Cli, OutputIsDeterministic) {
  const Result a = run({"fixtures", "all", "--seed", "5"});
  const Result b = run({"fixtures", "all", "--seed", "5"});
  EXPECT_EQ(a.out, b.out);
}

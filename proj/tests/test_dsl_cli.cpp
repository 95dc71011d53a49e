#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "pcard/cli.hpp"
#include "support.hpp"

using namespace pcard;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Dsl, PrintParseRoundTrip) {
  const std::vector<std::string> exprs = {
      "sigma_star(2)",
      R"(prefix("2:0"))",
      R"(finite(["2:1", "2:00"]))",
      "finite(2, [])",
      R"(compose(prepend_w("2:1"), prepend_w("2:0")))",
      R"(findiff(dedekind(2), ["2:0"], []))",
      "collection(suffix_collection(2), [1, 1], [1, 1])",
      "add(3, -4)",
  };
  for (const auto& e : exprs) {
    auto parsed = dsl::parse(e);
    EXPECT_EQ(dsl::print(parsed), e);
    EXPECT_EQ(dsl::parse(dsl::print(parsed)), parsed);
  }
  EXPECT_EQ(dsl::print(dsl::parse(R"(  prefix ( "2:0" ) )")), R"(prefix("2:0"))");
}

TEST(Dsl, NamesRoundTripThroughEvaluation) {
  for (const auto& e : {std::string("sigma_star(2)"), std::string(R"(prefix("2:01"))"), std::string("shift_set(2, 3)"),
                        std::string(R"(complement(finite(["2:1"])))"), std::string("oplus(tower_gap_A0(2), dedekind(2))")}) {
    auto L = dsl::eval_language(e);
    EXPECT_EQ(L.name(), e);
    EXPECT_EQ(dsl::eval_language(L.name()).name(), e);
  }
}

TEST(Dsl, SyntaxErrorsCarryPositions) {
  try {
    dsl::parse("prefix(\"2:0\"");
    FAIL();
  } catch (const dsl::SyntaxError& e) {
    EXPECT_EQ(e.position(), 12u);
  }
  EXPECT_THROW(dsl::parse("sigma_star(2))"), dsl::SyntaxError);
  EXPECT_THROW(dsl::parse("sigma_star"), dsl::SyntaxError);
  EXPECT_THROW(dsl::evaluate("no_such_thing(2)"), dsl::SyntaxError);
  EXPECT_THROW(dsl::evaluate(R"(prefix("2:3"))"), dsl::SyntaxError);
}

TEST(Dsl, TypeErrors) {
  EXPECT_THROW(dsl::evaluate(R"(sigma_star("2:0"))"), dsl::TypeError);
  EXPECT_THROW(dsl::evaluate("sigma_star(2, 3)"), dsl::TypeError);
  EXPECT_THROW(dsl::evaluate("finite([])"), dsl::TypeError);
  EXPECT_THROW(dsl::eval_witness("sigma_star(2)"), dsl::TypeError);
  EXPECT_THROW(dsl::evaluate("replace_first(2, 5)"), dsl::TypeError);
}

TEST(Dsl, ValueKinds) {
  EXPECT_EQ(dsl::kind_name(dsl::evaluate("3")), "integer");
  EXPECT_EQ(dsl::kind_name(dsl::evaluate(R"("2:01")")), "string");
  EXPECT_EQ(dsl::kind_name(dsl::evaluate("flip(2)")), "map");
  EXPECT_EQ(dsl::kind_name(dsl::evaluate("sigma_self_sum(2)")), "witness");
  EXPECT_EQ(dsl::kind_name(dsl::evaluate(fixtures::finite_diffs().front().diff)), "finite difference");
  EXPECT_EQ(dsl::describe(dsl::evaluate(R"(["2:1", 4])")), R"(["2:1", 4])");
}

TEST(Dsl, FuelOptionReachesLanguages) {
  auto L = dsl::eval_language("sigma_star(2)", dsl::EvalOptions{3});
  EXPECT_EQ(L.fuel_limit(), 3u);
  EXPECT_THROW(L.contains(testing_support::bin("0101")), FuelExhausted);
}

TEST(Dsl, EveryBuiltinIsDocumentedByName) {
  auto names = dsl::builtin_names();
  EXPECT_GE(names.size(), 60u);
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
}

TEST(Cli, CensusCsv) {
  auto r = cli_run({"census", "--lang", "sigma_star(2)", "--upto", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,count\n0,1\n1,3\n2,7\n3,15\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli_run({"bogus"}).code, 2);
  EXPECT_EQ(cli_run({"census"}).code, 2);
  EXPECT_EQ(cli_run({"census", "--lang", "sigma_star(2"}).code, 2);
  EXPECT_EQ(cli_run({"check-equi", "--witness", "sigma_self_sum(2)", "--upto", "6"}).code, 0);
  EXPECT_EQ(cli_run({"check-equi", "--witness",
                     R"(witness(prepend("2:0"), replace_first(2, 1), sigma_star(2), prefix("2:0")))", "--upto", "4"})
                .code,
            1);
  EXPECT_EQ(cli_run({"unrank-in", "--lang", "dedekind(2)", "--rank", "3", "--nmax", "20"}).code, 1);
  EXPECT_EQ(cli_run({"choice", "--collection", "collection(same_length_one_graph(2), [0, 1], [0, 1])", "--upto", "3"}).code,
            1);
}

TEST(Cli, ReportEnvelope) {
  auto r = cli_run({"check-equi", "--witness", "shift(2, 2)", "--upto", "5"});
  ASSERT_EQ(r.code, 0);
  auto j = cli::Json::parse(r.out);
  EXPECT_EQ(j["command"], "check-equi");
  EXPECT_EQ(j["inputs"]["witness"], "shift(2, 2)");
  EXPECT_EQ(j["checked_up_to"], 5);
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_EQ(j["summary"]["violation_count"], 0);
}

TEST(Cli, ReduceReportsPaths) {
  auto r = cli_run({"reduce", "--witness", fixtures::proper_witnesses().back().witness, "--a0", R"("2:")", "--upto", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = cli::Json::parse(r.out);
  EXPECT_GT(j["summary"]["paths"]["mismatch"].get<int>(), 0);
  EXPECT_GT(j["summary"]["paths"]["accepted"].get<int>(), 0);
}

TEST(Cli, JsonFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "pcard_report.json";
  auto r = cli_run({"cb", "--p", R"(prepend("2:0"))", "--q", R"(prepend("2:1"))", "--A", "sigma_star(2)", "--B",
                    "sigma_star(2)", "--verify-upto", "5", "--json", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), r.out);
  std::remove(path.c_str());
}

TEST(Cli, DiagIsDeterministic) {
  const std::vector<std::string> args = {"diag", "--A", "empty(2)", "--B", "sigma_star(2)", "--stages", "18",
                                         "--horizon", "5"};
  auto a = cli_run(args), b = cli_run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = cli::Json::parse(a.out);
  EXPECT_EQ(j["summary"]["stages"], 18);
  EXPECT_EQ(j["trace"].size(), 19u);
}

TEST(Cli, SeedIsAcceptedAndIgnored) {
  auto a = cli_run({"gallery", "--upto", "3"});
  auto b = cli_run({"gallery", "--upto", "3", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "tkklab/weights.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tkklab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyTkkPasses) {
  auto r = run({"verify", "tkk", "--kind", "hermR", "--n", "3"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find(".jacobi\",\"status\":\"pass\""), std::string::npos) << r.out;
  EXPECT_EQ(run({"tkk", "verify", "--kind", "hermR", "--n", "3"}).out, r.out);
}

TEST(Cli, E7WeightCheckPasses) {
  auto r = run({"weights", "check", "--kind", "e7", "--weight", "[0,0,0,0,0,-4,2,-2]", "--a", "18"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, WrongAIsACheckFailure) {
  auto r = run({"weights", "check", "--kind", "e7", "--weight", "[0,0,0,0,0,-4,2,-2]", "--a", "17"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"status\":\"fail\""), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "tkk", "--kind", "hermR", "--n", "0"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"weights", "check", "--kind", "e7", "--weight", "[1,2]", "--a", "1"}).code, 2);
  EXPECT_EQ(run({"ueval", "hw", "--kind", "hermR", "--n", "3", "--weight", "[0,0,0]", "--relation", "Q3"}).code, 2);
  EXPECT_EQ(run({"jordan", "info", "--kind", "nonsense", "--n", "3"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  auto r = run({"weights", "solve", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--bound"), std::string::npos);
}

TEST(Cli, OutputIsDeterministicSortedJson) {
  auto a = run({"cartan", "verify", "--kind", "hermC", "--n", "2"});
  auto b = run({"cartan", "verify", "--kind", "hermC", "--n", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.dump(), line);
    EXPECT_TRUE(j.contains("identity") && j.contains("status"));
  }
}

TEST(Cli, TablesAndInfo) {
  auto md = run({"weights", "tables", "--format", "md"});
  EXPECT_EQ(md.code, 0);
  EXPECT_EQ(md.out, tkklab::weights::tables_md());
  auto info = run({"jordan", "info", "--kind", "hermC", "--n", "3"});
  auto j = nlohmann::json::parse(info.out);
  EXPECT_EQ(j["D"], 9);
  EXPECT_EQ(j["rho"], 3);
  EXPECT_EQ(j["d"], 2);
}

TEST(Cli, HwAtSp3Weight) {
  auto r = run({"ueval", "hw", "--kind", "hermR", "--n", "3", "--weight", "[\"-1/2\",\"-1/2\",\"-3/2\"]", "--a", "15/16"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(run({"ueval", "hw", "--kind", "hermR", "--n", "3", "--weight", "[0,0,-1]", "--a", "15/16"}).code, 1);
}

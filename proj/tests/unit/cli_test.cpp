#include "seqforge/cli.hpp"

#include "seqforge/sequence_io.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace seqforge::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  args.insert(args.begin(), "seqforge");
  std::ostringstream out, err;
  const int code = run(args, out, err, std::move(env));
  return {code, out.str(), err.str()};
}

TEST(CliCountTest, Examples) {
  EXPECT_EQ(invoke({"count", "--n", "5", "--alpha", "2", "--beta", "1"}).out, "6\n");
  EXPECT_EQ(invoke({"count", "--n", "0"}).out, "1\n");
  EXPECT_EQ(invoke({"count", "--n", "4", "--gap-parity", "odd", "--min-size", "2"}).out, "7\n");
}

TEST(CliCountTest, EnginesAndLimits) {
  // Above the limit, the recurrence engine takes over where it covers the condition.
  const Result big = invoke({"count", "--n", "100", "--alpha", "1", "--beta", "1"});
  EXPECT_EQ(big.code, kOk);
  EXPECT_EQ(big.out, "927372692193078999176\n");  // F_102
  EXPECT_EQ(invoke({"count", "--n", "40", "--alpha", "2", "--gap-parity", "odd"}).code, kResourceLimit);
  EXPECT_EQ(invoke({"count", "--n", "12", "--engine", "oracle", "--limit", "10"}).code, kResourceLimit);
  EXPECT_EQ(invoke({"count", "--n", "12"}, "10").code, kOk);  // recurrence engine covers 2^n
  EXPECT_EQ(invoke({"count", "--n", "12", "--engine", "oracle"}, "10").code, kResourceLimit);
  EXPECT_EQ(invoke({"count", "--n", "12", "--engine", "oracle", "--limit", "12"}, "10").code, kOk);
  EXPECT_EQ(invoke({"count", "--n", "12"}, "banana").code, kUsageError);
  EXPECT_EQ(invoke({"count", "--n", "9", "--engine", "recurrence", "--gap-parity", "even"}).out,
            invoke({"count", "--n", "9", "--engine", "oracle", "--gap-parity", "even"}).out);
}

TEST(CliCountTest, UsageErrors) {
  EXPECT_EQ(invoke({"count"}).code, kUsageError);
  EXPECT_EQ(invoke({"count", "--n", "5", "--bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"count", "--n", "5", "--alpha", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"count", "--n", "5", "--forced-max", "6"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
}

TEST(CliCountTest, JsonOutput) {
  const auto doc = nlohmann::json::parse(invoke({"count", "--n", "5", "--alpha", "2", "--format", "json"}).out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["count"], "6");
}

TEST(CliSeqTest, HBfile) {
  const Result r = invoke({"seq", "--family", "H", "--to", "6", "--format", "bfile"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0 0\n1 1\n2 3\n3 7\n4 14\n5 26\n6 46\n");
}

TEST(CliSeqTest, TableOneRow) {
  const SequenceWindow w = parse_bfile(invoke({"seq", "--family", "genfib", "--n", "3", "--to", "12", "--format", "bfile"}).out);
  EXPECT_EQ(w, (SequenceWindow{"", 0, gen_fib_seq(3, 12).terms}));
}

TEST(CliSeqTest, MinSizeSequence) {
  const Result r = invoke({"seq", "--family", "minsize-oddgap", "--k", "3", "--to", "12", "--format", "json"});
  const SequenceWindow w = parse_json(r.out);
  EXPECT_EQ(w.offset, 1);
  std::vector<BigCount> expected;
  for (long v : {0, 0, 1, 3, 8, 17, 34, 63, 113, 196, 334, 560}) expected.emplace_back(v);
  EXPECT_EQ(w.terms, expected);
}

TEST(CliSeqTest, FromAndFamilies) {
  EXPECT_EQ(invoke({"seq", "--family", "fib", "--from", "10", "--to", "11", "--format", "csv"}).out,
            "index,value\n10,55\n11,89\n");
  EXPECT_EQ(invoke({"seq", "--family", "oddgap-contain", "--to", "3", "--format", "bfile"}).out, "1 1\n2 2\n3 3\n");
  EXPECT_EQ(invoke({"seq", "--family", "nope", "--to", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "--family", "schreier-zeckendorf", "--from", "0", "--to", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"seq", "--family", "H", "--to", "3", "--format", "xml"}).code, kUsageError);
}

TEST(CliSeqTest, DeterministicAndWritesFiles) {
  const std::vector<std::string> args = {"seq", "--family", "genH", "--n", "4", "--to", "80", "--format", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);

  const auto path = std::filesystem::temp_directory_path() / "seqforge_cli_test.b";
  const Result r = invoke({"seq", "--family", "H", "--to", "50", "--format", "bfile", "--output", path.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(parse_bfile(text.str()).terms, h_seq(50).terms);
  std::filesystem::remove(path);
}

TEST(CliVerifyTest, Examples) {
  EXPECT_EQ(invoke({"verify", "--id", "fib-h", "--to", "200"}).code, kOk);
  EXPECT_EQ(invoke({"verify", "--id", "gen-shift", "--n", "3", "--to", "300"}).code, kOk);
  const Result ratio = invoke({"verify", "--id", "ratio", "--to", "60", "--threshold", "1e-3"});
  EXPECT_EQ(ratio.code, kOk);
  EXPECT_NE(ratio.out.find("PASS ratio"), std::string::npos);
}

TEST(CliVerifyTest, FailuresAndBadIds) {
  // At n = 10 the gap is far above 1e-3.
  const Result r = invoke({"verify", "--id", "ratio", "--to", "10", "--format", "json"});
  EXPECT_EQ(r.code, kVerificationFailure);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["passed"], false);
  EXPECT_EQ(doc["ratio"]["ratio"], "58/71");
  EXPECT_EQ(invoke({"verify", "--id", "nope"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--id", "odd-gap", "--to", "40"}).code, kResourceLimit);
  EXPECT_EQ(invoke({"verify", "--id", "ratio", "--threshold", "tiny"}).code, kUsageError);
}

TEST(CliVerifyTest, JsonReports) {
  const auto doc = nlohmann::json::parse(invoke({"verify", "--id", "gen-sum", "--to", "50", "--format", "json"}).out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(doc["reports"].size(), 7u);
  EXPECT_TRUE(doc["reports"][0]["counterexample"].is_null());
}

TEST(CliDiscoverTest, Examples) {
  EXPECT_EQ(invoke({"discover", "--alpha", "1", "--beta", "1", "--expect-order", "2"}).code, kOk);
  EXPECT_EQ(invoke({"discover", "--alpha", "2", "--beta", "3", "--expect-order", "5"}).code, kOk);
  EXPECT_EQ(invoke({"discover", "--alpha", "1", "--beta", "1", "--probe", "3"}).code, kInconclusive);
  EXPECT_EQ(invoke({"discover", "--alpha", "2", "--beta", "3", "--expect-order", "4"}).code, kVerificationFailure);
}

TEST(CliDiscoverTest, FamilyMode) {
  const auto doc = nlohmann::json::parse(
      invoke({"discover", "--family", "genH", "--n", "3", "--to", "60", "--format", "json"}).out);
  EXPECT_EQ(doc["status"], "found");
  EXPECT_EQ(doc["order"], 5);
  const Result k3 = invoke({"discover", "--family", "minsize-oddgap", "--k", "3", "--to", "60"});
  EXPECT_EQ(k3.code, kOk);
  EXPECT_NE(k3.out.find("status found"), std::string::npos);
}

TEST(CliEnumerateTest, ListsSubsets) {
  EXPECT_EQ(invoke({"enumerate", "--n", "3", "--gap-parity", "even", "--forced-max", "3"}).out, "{3}\n{1,3}\n");
  EXPECT_EQ(invoke({"enumerate", "--n", "31"}).code, kResourceLimit);
}

TEST(CliConfigTest, FileValuesYieldToFlags) {
  const auto path = std::filesystem::temp_directory_path() / "seqforge_cli_test.toml";
  {
    std::ofstream cfg(path);
    cfg << "[count]\nn = 5\nalpha = 2\n";
  }
  EXPECT_EQ(invoke({"--config", path.string(), "count"}).out, "6\n");
  EXPECT_EQ(invoke({"--config", path.string(), "count", "--n", "4"}).out, "4\n");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace seqforge::cli

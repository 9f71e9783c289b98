#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"

namespace chessspace::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kBatch = std::string(CHESSSPACE_TEST_DATA_DIR) + "/batch_sets.txt";

TEST(Cli, CountPaperSet) {
  auto r = invoke({"count", "KNNNNvkq"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "130455400320\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, CountEmptySetAndFlags) {
  EXPECT_EQ(invoke({"count", "v"}).out, "1\n");
  EXPECT_EQ(invoke({"count", "KNNNNvkq", "--stm-factor"}).out, "260910800640\n");
  EXPECT_EQ(invoke({"count", "KQRv", "--board", "1x6"}).out, "120\n");
  auto none = invoke({"count", "KQRBNvkq", "--board", "2x3"});
  EXPECT_EQ(none.code, kOk);
  EXPECT_EQ(none.out, "0\n");
  EXPECT_NE(none.err.find("0 placements"), std::string::npos);
}

TEST(Cli, CountJson) {
  auto r = invoke({"count", "KNNNNvKRR", "--json"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "count");
  EXPECT_EQ(j["set"], "KNNNNvkrr");
  EXPECT_EQ(j["count"], "3717978909120");
  EXPECT_EQ(j["board"], "8x8");
  EXPECT_EQ(j["pieces"], 8);
}

TEST(Cli, RatioJson) {
  auto r = invoke({"ratio", "--examined", "120000", "KNNNNvKRR", "--json"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["percent"], "0.00000322756");
  EXPECT_EQ(j["total"], "3717978909120");
  auto r5 = nlohmann::json::parse(
      invoke({"ratio", "--examined", "120000", "KNNNNvKRR", "--precision", "5", "--json"}).out);
  EXPECT_EQ(r5["percent"], "0.0000032276");
}

TEST(Cli, RatioText) {
  auto r = invoke({"ratio", "--examined", "120000", "KNNNNvKRR"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("percent    0.00000322756%\n"), std::string::npos);
}

TEST(Cli, EnumerateLines) {
  auto r = invoke({"enumerate", "Kv", "--board", "2x1", "--stm", "w"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "K1 w\n1K w\n");
  EXPECT_EQ(invoke({"enumerate", "KQRv", "--board", "1x6", "--limit", "5"}).out.size(), 5u * 12u);
  auto j = nlohmann::json::parse(invoke({"enumerate", "NNv", "--board", "2x2", "--json"}).out);
  EXPECT_EQ(j["count"], 6);
  EXPECT_EQ(j["placements"][0], "2/NN");
  EXPECT_TRUE(j["side_to_move"].is_null());
}

TEST(Cli, LegalExact) {
  auto j = nlohmann::json::parse(invoke({"legal-exact", "Kvk", "--stm", "b", "--json"}).out);
  EXPECT_EQ(j["legal"], "3612");
  EXPECT_EQ(j["total"], "4032");
  EXPECT_EQ(j["side_to_move"], "b");
}

TEST(Cli, LegalSampleIsReproducible) {
  std::vector<std::string> args{"legal-sample", "Kvk", "--samples", "20000", "--seed", "7", "--stm", "w", "--json"};
  auto a = invoke(args);
  auto b = invoke(args);
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["rng"], "splitmix64-counter/v1");
  EXPECT_EQ(j["interval"], "wilson");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["samples"], 20000);
}

TEST(Cli, ClassesWithPawnWarning) {
  auto r = invoke({"classes", "Kv", "--json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"], "16");
  EXPECT_EQ(j["raw"], "64");
  EXPECT_EQ(j["group"], "c4");

  auto pawns = invoke({"classes", "KPvk", "--group", "d4"});
  EXPECT_EQ(pawns.code, kOk);
  EXPECT_NE(pawns.err.find("warning"), std::string::npos);
  EXPECT_TRUE(invoke({"classes", "KPvk", "--group", "id"}).err.empty());
}

TEST(Cli, ExitCodes) {
  auto parse = invoke({"count", "KXvk"});
  EXPECT_EQ(parse.code, kUsageError);
  EXPECT_TRUE(parse.out.empty());
  EXPECT_NE(parse.err.find("'X'"), std::string::npos);

  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"count"}).code, kUsageError);
  EXPECT_EQ(invoke({"count", "Kvk", "--board", "20x20"}).code, kUsageError);
  EXPECT_EQ(invoke({"legal-exact", "Kvk"}).code, kUsageError);
  EXPECT_EQ(invoke({"legal-sample", "Kvk", "--samples", "0", "--seed", "1", "--stm", "w"}).code, kUsageError);

  auto invalid = invoke({"legal-exact", "KQv", "--stm", "w"});
  EXPECT_EQ(invalid.code, kDomainError);
  EXPECT_TRUE(invalid.out.empty());
  EXPECT_NE(invalid.err.find("missing-king (Black)"), std::string::npos);

  EXPECT_EQ(invoke({"enumerate", "KNNNNvkq"}).code, kDomainError);
  EXPECT_EQ(invoke({"classes", "Kvk", "--board", "2x3", "--group", "c4"}).code, kDomainError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, BatchJsonLinesFollowInput) {
  auto r = invoke({"count", "--batch", kBatch, "--json"});
  EXPECT_EQ(r.code, kUsageError);  // worst line
  std::istringstream lines(r.out);
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0]["count"], "130455400320");
  EXPECT_EQ(rows[1]["count"], "3717978909120");
  EXPECT_EQ(rows[2]["count"], "4032");
  EXPECT_EQ(rows[3]["input"], "KXvk");
  EXPECT_EQ(rows[3]["error"]["code"], 1);
  EXPECT_EQ(rows[4]["count"], "4032");
}

TEST(Cli, BatchText) {
  auto r = invoke({"legal-exact", "--batch", kBatch, "--stm", "w"});
  EXPECT_EQ(r.code, kDomainError);
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_NE(rows[0].find("budget"), std::string::npos);
  EXPECT_EQ(rows[2].rfind("Kvk", 0), 0u);
  EXPECT_NE(rows[2].find("3612"), std::string::npos);
  EXPECT_NE(rows[4].find("missing-king"), std::string::npos);
}

TEST(Cli, BatchAndSetAreExclusive) {
  EXPECT_EQ(invoke({"count", "Kvk", "--batch", kBatch}).code, kUsageError);
  EXPECT_EQ(invoke({"count", "--batch", "/nonexistent/file"}).code, kUsageError);
}

}  // namespace
}  // namespace chessspace::cli

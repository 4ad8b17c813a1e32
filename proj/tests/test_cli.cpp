#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "starring/cli.hpp"

using namespace starring;

namespace {

const std::string kCatalog = STARRING_TEST_DATA_DIR "/catalog.ring";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "starring");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, ClassifyMatrixRingOverZ6) {
  const auto r = run({"classify", kCatalog, "--ring", "M2Z6", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["order"], 1296);
  EXPECT_EQ(j["verdicts"]["baer_star"], false);
  EXPECT_EQ(j["verdicts"]["quasi_baer_star"], true);
  EXPECT_EQ(j["verdicts"]["pq_baer_star"], true);
  EXPECT_EQ(j["config"]["seed"], "0xA15E");
  EXPECT_EQ(j["config"]["bound"], 20000);
  EXPECT_TRUE(j["timing_ms"].is_null());
}

TEST(Cli, ClassifyZ6AndZ4) {
  EXPECT_EQ(json_of(run({"classify", kCatalog, "--ring", "Z6", "--json"}))["verdicts"]["baer_star"], true);
  EXPECT_EQ(json_of(run({"classify", kCatalog, "--ring", "Z4", "--json"}))["verdicts"]["rickart_star"], false);
}

TEST(Cli, TopLevelKeysInOrder) {
  const auto j = json_of(run({"classify", kCatalog, "--ring", "Z6", "--json"}));
  // The parsed object sorts its keys, so order is checked on the raw text.
  for (const char* k : {"ring", "order", "config", "verdicts", "witnesses", "timing_ms"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  const auto text = run({"classify", kCatalog, "--ring", "Z6", "--json"}).out;
  EXPECT_LT(text.find("\"ring\""), text.find("\"order\""));
  EXPECT_LT(text.find("\"config\""), text.find("\"verdicts\""));
  EXPECT_LT(text.find("\"witnesses\""), text.find("\"timing_ms\""));
}

TEST(Cli, ProjectionsAndCovers) {
  const auto p = json_of(run({"projections", kCatalog, "--ring", "M2Z3", "--json"}));
  EXPECT_EQ(p["projections"].size(), 6u);
  EXPECT_EQ(p["central_count"], 2);

  const auto c = json_of(run({"cover", kCatalog, "--ring", "M2Z3", "--element", "[[1,0],[0,0]]", "--json"}));
  EXPECT_EQ(c["cover"], "[[1,0],[0,1]]");
  const auto z = json_of(run({"cover", kCatalog, "--ring", "Z6", "--element", "2", "--json"}));
  EXPECT_EQ(z["cover"], "4");
  ASSERT_EQ(z["certificate"]["smaller_central_projections"].size(), 1u);
  EXPECT_EQ(z["certificate"]["smaller_central_projections"][0]["central"], "0");

  EXPECT_EQ(run({"cover", kCatalog, "--ring", "Z6", "--element", "[[1]]"}).code, kExitUsage);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", kCatalog, "--ring", "M2Z3"}).code, kExitSuccess);
  const auto th002 = json_of(run({"verify", kCatalog, "--ring", "M2Z6", "--theorem", "th002", "--json"}));
  EXPECT_EQ(th002["verdicts"]["th002"]["passed"], true);
  EXPECT_EQ(th002["verdicts"].size(), 1u);

  const auto unknown = run({"verify", kCatalog, "--ring", "Nope"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("unknown-identifier"), std::string::npos);
  EXPECT_EQ(run({"verify", kCatalog, "--ring", "Z6", "--theorem", "th99"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", kCatalog, "--ring", "Z6", "--theorem", "lm3"}).code, kExitUsage);
}

TEST(Cli, ParseErrorsReportPosition) {
  const auto path = write_temp("starring_bad.ring", "ring A = zmod(3)\nring B = mat(2 A)\n");
  const auto r = run({"classify", path});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2, column 16"), std::string::npos) << r.err;

  const auto zero = write_temp("starring_zero.ring", "ring B = mat(2, zmod(0))\n");
  EXPECT_EQ(run({"classify", zero}).code, kExitUsage);
}

TEST(Cli, ResourceLimits) {
  EXPECT_EQ(run({"classify", kCatalog, "--ring", "M2Z6", "--bound", "1000"}).code, kExitResource);
  EXPECT_EQ(run({"search-nonunital", "--order-max", "17"}).code, kExitResource);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"classify"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", kCatalog, "--seed", "xyz"}).code, kExitUsage);
  EXPECT_EQ(run({"validate", kCatalog, "--mode", "partial"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitSuccess);
}

TEST(Cli, ValidateModes) {
  for (const char* mode : {"full", "complete", "sampled"}) {
    const auto r = run({"validate", kCatalog, "--ring", "Z6", "--mode", mode, "--json"});
    EXPECT_EQ(r.code, 0) << mode;
    EXPECT_EQ(json_of(r)["passed"], true);
  }
  const auto s = json_of(run({"validate", kCatalog, "--ring", "Z6", "--mode", "sampled", "--seed", "0x1", "--json"}));
  EXPECT_EQ(s["config"]["seed"], "0x1");
  EXPECT_EQ(s["mode"]["seed"], "0x1");
}

TEST(Cli, UnitifyCheck) {
  const auto r = run({"unitify-check", kCatalog, "--ring", "UM3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  for (const char* k : {"action_laws", "r1_axioms", "unity", "star_ideal", "condition_iii", "r1_pq_baer_star"}) {
    EXPECT_EQ(j["verdicts"][k], true) << k;
  }
  EXPECT_EQ(j["theorems"].size(), 5u);
  EXPECT_EQ(run({"unitify-check", kCatalog, "--ring", "Z3"}).code, kExitUsage);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  const std::vector<std::vector<std::string>> commands = {
      {"classify", kCatalog, "--ring", "P23", "--json"},
      {"verify", kCatalog, "--ring", "U3", "--json"},
      {"projections", kCatalog, "--ring", "M2Z2", "--json"},
      {"search-nonunital", "--order-max", "6", "--json"},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << c[0];
  }
  auto timed = commands[0];
  timed.push_back("--timing");
  EXPECT_TRUE(json_of(run(timed))["timing_ms"].is_number());
}

TEST(Cli, FullWitnessesExpandMaps) {
  const auto compact = json_of(run({"classify", kCatalog, "--ring", "Z6", "--json"}));
  const auto full = json_of(run({"classify", kCatalog, "--ring", "Z6", "--json", "--full-witnesses"}));
  const auto& cm = compact["witnesses"]["weakly_pq_baer_star"]["map"];
  const auto& fm = full["witnesses"]["weakly_pq_baer_star"]["map"];
  ASSERT_TRUE(cm.is_object());
  ASSERT_TRUE(fm.is_array());
  EXPECT_EQ(cm["size"], fm.size());
  EXPECT_EQ(fm.size(), 6u);
}

TEST(Cli, BaerTable) {
  const auto r = run({"c031-table", "--n-max", "2", "--m-max", "6", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["rows"].size(), 10u);
  EXPECT_EQ(j["summary"]["disagreements"], 0);
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "walkreg/cli.hpp"

namespace walkreg {
namespace {

namespace fs = std::filesystem;

const fs::path kData = WALKREG_TEST_DATA_DIR;
const fs::path kGolden = WALKREG_GOLDEN_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

// Set WALKREG_UPDATE_GOLDEN=1 to rewrite the expected files.
TEST_P(GoldenTest, MatchesExpectedOutput) {
  const auto& c = GetParam();
  const Result r = run(c.args);
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const fs::path file = kGolden / (c.name + ".txt");
  if (std::getenv("WALKREG_UPDATE_GOLDEN")) {
    std::ofstream(file, std::ios::binary) << r.out;
  }
  EXPECT_EQ(r.out, slurp(file));
}

INSTANTIATE_TEST_SUITE_P(
    Cli, GoldenTest,
    ::testing::Values(
        GoldenCase{"analyze_k3", {"analyze", "Bw"}},
        GoldenCase{"analyze_k3_json", {"analyze", "Bw", "--json"}},
        GoldenCase{"analyze_petersen", {"analyze", "IheA@GUAo"}},
        GoldenCase{"gen_cycle4", {"gen", "cycle", "4"}},
        GoldenCase{"gen_petersen", {"gen", "petersen"}},
        GoldenCase{"enumerate_4", {"enumerate", "4"}},
        GoldenCase{"scan_connected5",
                   {"scan", (kData / "connected5.g6").string(), "--filter", "reversible", "--filter",
                    "walk_regular & !vertex_transitive", "--json"}},
        GoldenCase{"spectrum_connected5", {"spectrum", (kData / "connected5.g6").string()}},
        GoldenCase{"simulate_k3", {"simulate", "Bw", "--vertex", "0", "--steps", "2", "--trials", "10000", "--seed", "42"}},
        GoldenCase{"hitting_p3", {"hitting", "BW"}},
        GoldenCase{"resistance_c4", {"resistance", "Cl"}},
        GoldenCase{"resistance_c4_json", {"resistance", "Cl", "--json"}}),
    [](const auto& info) { return info.param.name; });

TEST(CliTest, AnalyzeTriangleReportsExactRpi) {
  const Result r = run({"analyze", "Bw", "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["reversible"], true);
  EXPECT_EQ(j["r_pi"], "4/9");
}

TEST(CliTest, GenAndEnumerate) {
  EXPECT_EQ(run({"gen", "cycle", "4"}).out, "Cl\n");
  EXPECT_EQ(run({"gen", "complete", "3"}).out, "Bw\n");
  EXPECT_EQ(run({"enumerate", "3"}).out, "BW\nBw\n");
}

TEST(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"simulate", "Bw", "--vertex", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "dodecahedron"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"scan", "Bw"}).code, cli::kExitUsage);
}

TEST(CliTest, DataErrorsExitTwo) {
  EXPECT_EQ(run({"analyze", "B!"}).code, cli::kExitData);
  EXPECT_EQ(run({"hitting", "BW", "--json"}).code, cli::kExitOk);
  EXPECT_EQ(run({"hitting", "B_"}).code, cli::kExitData);  // 0-1 only: disconnected
  EXPECT_EQ(run({"gen", "cycle", "2"}).code, cli::kExitData);
  EXPECT_EQ(run({"enumerate", "8"}).code, cli::kExitData);
  EXPECT_EQ(run({"scan", "Bw", "--filter", "bogus"}).code, cli::kExitData);
  EXPECT_EQ(run({"simulate", "Bw", "--vertex", "5", "--steps", "2", "--trials", "10", "--seed", "1"}).code,
            cli::kExitData);
}

TEST(CliTest, FileErrorsNameTheLine) {
  const Result r = run({"analyze", (kData / "bad_line3.g6").string()});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("bad_line3.g6:3:"), std::string::npos) << r.err;
}

TEST(CliTest, ScanWritesJsonFileAndSpectrumCsv) {
  const fs::path dir = fs::temp_directory_path() / "walkreg_cli_test";
  fs::create_directories(dir);
  const std::string json_path = (dir / "scan.json").string();
  const std::string csv_path = (dir / "spec.csv").string();
  const std::string input = (kData / "connected5.g6").string();
  ASSERT_EQ(run({"scan", input, "--filter", "reversible", "--out", json_path, "--jobs", "4"}).code, 0);
  const Json j = Json::parse(slurp(json_path));
  EXPECT_EQ(j["total"], 31);
  ASSERT_EQ(run({"spectrum", input, "--csv", csv_path}).code, 0);
  const std::string csv = slurp(csv_path);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "value_num,value_den,witness_graph6");
}

TEST(CliTest, SimulateIsRepeatable) {
  const std::vector<std::string> args{"simulate", "IheA@GUAo", "--vertex", "2", "--steps", "6",
                                      "--trials", "5000", "--seed", "9", "--json"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace walkreg

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int status;
  std::string output;
};

Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(SSRM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, output};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ssrm_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(CliTest, ListsSixProblems) {
  const auto r = run_cli("list");
  EXPECT_EQ(r.status, 0);
  std::istringstream in(r.output);
  std::string line;
  int rows = 0;
  std::getline(in, line);  // header
  while (std::getline(in, line)) rows += line.empty() ? 0 : 1;
  EXPECT_EQ(rows, 6);
}

TEST(CliTest, ListJsonCarriesReferenceValues) {
  const auto r = run_cli("list --json");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.output);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 6u);
  EXPECT_EQ(j[0]["name"], "beam");
  EXPECT_EQ(j[0]["reference_pf"].get<double>(), 0.009594);
  EXPECT_EQ(j[3]["name"], "pipe");
  EXPECT_EQ(j[3]["reference_pf"].get<double>(), 0.034353);
}

TEST(CliTest, UnknownProblemIsAnError) {
  const auto r = run_cli("run nosuch -q");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("nosuch"), std::string::npos);
}

TEST(CliTest, OracleIsRepeatable) {
  const auto path = scratch("oracle.json");
  const auto a = run_cli("oracle cubic -n 100 --json " + path.string());
  const auto b = run_cli("oracle cubic -n 100");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(json::parse(slurp(path))["n_samples"], 100);
}

TEST(CliTest, RunWritesReproducibleRecordAndTrace) {
  const auto out1 = scratch("pipe1.json"), out2 = scratch("pipe2.json");
  const auto trace = scratch("pipe_trace.csv");
  const std::string common = " --n-mcs 50000 --seed-mcs 7 -q";
  const auto r1 = run_cli("run pipe -o " + out1.string() + " --trace " + trace.string() + common);
  ASSERT_EQ(r1.status, 0) << r1.output;
  const auto r2 = run_cli("run pipe -o " + out2.string() + " --trace " + scratch("t2.csv").string() +
                          " --threads 4" + common);
  ASSERT_EQ(r2.status, 0) << r2.output;
  json a = json::parse(slurp(out1)), b = json::parse(slurp(out2));
  a.erase("timings");
  b.erase("timings");
  EXPECT_EQ(a.dump(), b.dump());

  // Re-running from the echoed configuration reproduces the estimate.
  const auto out3 = scratch("pipe3.json");
  const auto r3 = run_cli("run pipe --config " + out1.string() + " -q -o " + out3.string() +
                          " --trace " + scratch("t3.csv").string());
  ASSERT_EQ(r3.status, 0) << r3.output;
  EXPECT_EQ(json::parse(slurp(out3))["result"]["final_pf"], a["result"]["final_pf"]);

  std::istringstream csv(slurp(trace));
  std::string line;
  int rows = -1;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 5 + a["result"]["iterations"].get<int>());
}

TEST(CliTest, KMaxStopExitsWithTwo) {
  const auto r = run_cli("run cubic --k-max 1 --n-mcs 10000 -q -o " + scratch("k.json").string() +
                         " --trace " + scratch("k.csv").string());
  EXPECT_EQ(r.status, 2) << r.output;
}

TEST(CliTest, ProblemFile) {
  const auto file = scratch("lin.json");
  std::ofstream(file) << R"({"name": "lin", "variables": [{"name": "a", "kind": "normal", "mean": 0, "std": 1}],
                           "lsf_expression": "2 - a"})";
  const auto path = scratch("lin_oracle.json");
  const auto r = run_cli("oracle " + file.string() + " -n 200000 --json " + path.string());
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NEAR(json::parse(slurp(path))["pf"].get<double>(), 0.02275, 0.0015);
}

TEST(CliTest, BadFlagIsAnError) {
  EXPECT_EQ(run_cli("run pipe --d-min -1 -q -o " + scratch("bad.json").string()).status, 1);
  EXPECT_NE(run_cli("frobnicate").status, 0);
}

}  // namespace

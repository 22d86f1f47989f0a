#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "ssrm/benchmarks.hpp"
#include "ssrm/error.hpp"
#include "ssrm/expression.hpp"
#include "ssrm/io.hpp"

namespace ssrm::io {
namespace {

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
  for (double v : {1.0 / 3.0, 0.034353, 1e-300, 6.02214076e23, -2.5e-7}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(ConfigJsonTest, RoundTrip) {
  SsrmConfig cfg;
  cfg.d_min = 0.77;
  cfg.k_max = 9;
  cfg.lhs_seed = 11;
  cfg.kernel = KernelKind::ThinPlateSpline;
  cfg.initial_size_rule = InitialSizeRule::TwoMPlusOne;
  cfg.shape_search.grid_points = 13;
  cfg.ga.population = 40;
  cfg.ga.seed = 99;
  const json j = to_json(cfg);
  const SsrmConfig back = config_from_json(json::parse(j.dump()));
  EXPECT_EQ(to_json(back), j);
  EXPECT_FALSE(j.contains("threads"));
}

TEST(ConfigJsonTest, PartialAndUnknownKeys) {
  const SsrmConfig cfg = config_from_json(json{{"eps_a", 1e-3}});
  EXPECT_EQ(cfg.eps_a, 1e-3);
  EXPECT_EQ(cfg.eps_r, SsrmConfig{}.eps_r);
  EXPECT_THROW(config_from_json(json{{"epsilon", 1.0}}), ParameterError);
  EXPECT_THROW(config_from_json(json{{"ga", {{"pop", 4}}}}), ParameterError);
  EXPECT_THROW(config_from_json(json{{"kernel", "cubic"}}), ParameterError);
}

TEST(ProblemJsonTest, ExpressionProblemMatchesBuiltin) {
  const json j = json::parse(R"({
    "name": "my_cubic",
    "variables": [
      {"name": "x1", "kind": "normal", "mean": 0.5, "std": 0.2},
      {"name": "x2", "kind": "normal", "mean": 0.5, "std": 0.2}
    ],
    "lsf_expression": "c - x1^3 - x2^3",
    "constants": {"c": 1.0},
    "ssrm_overrides": {"d_min": 0.6, "k_max": 12},
    "reference_pf": 0.03381,
    "reference_n": 1000000
  })");
  const auto p = problem_from_json(j);
  EXPECT_EQ(p.name, "my_cubic");
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_EQ(*p.overrides.d_min, 0.6);
  EXPECT_EQ(*p.overrides.k_max, 12);
  EXPECT_EQ(p.reference->n_samples, 1'000'000u);
  const auto builtin = benchmarks::cubic();
  for (double a : {-1.0, 0.3, 0.9}) {
    const std::vector<double> x{a, 0.7};
    EXPECT_DOUBLE_EQ(p.lsf(x), builtin.lsf(x));
  }
  EXPECT_EQ(estimate_pf_direct(p, 20000, 4).n_failures,
            estimate_pf_direct(builtin, 20000, 4).n_failures);
}

TEST(ProblemJsonTest, Rejections) {
  json good = json::parse(R"({"name": "q", "variables": [{"name": "a", "kind": "uniform", "low": 0, "high": 1}],
                              "lsf_expression": "a - 0.5"})");
  EXPECT_NO_THROW(problem_from_json(good));
  json bad = good;
  bad["lsf"] = "a";
  EXPECT_THROW(problem_from_json(bad), ParameterError);
  bad = good;
  bad["lsf_expression"] = "b - 0.5";
  EXPECT_THROW(problem_from_json(bad), ParseError);
  bad = good;
  bad["variables"][0]["kind"] = "weibull";
  EXPECT_THROW(problem_from_json(bad), ParameterError);
  bad = good;
  bad["variables"][0]["high"] = -1;
  EXPECT_THROW(problem_from_json(bad), ParameterError);
  EXPECT_THROW(load_problem_file("/nonexistent/problem.json"), LookupError);
}

TEST(MarginalJsonTest, RoundTrip) {
  for (const auto& m : {Marginal::normal(1, 2), Marginal::uniform(3, 4),
                        Marginal::gumbel_max_from_moments(1500, 350)}) {
    const auto back = marginal_from_json(marginal_to_json(m));
    EXPECT_EQ(back.kind, m.kind);
    EXPECT_NEAR(back.p1, m.p1, 1e-12 * std::abs(m.p1));
    EXPECT_NEAR(back.p2, m.p2, 1e-12 * std::abs(m.p2));
  }
}

class RunRecordTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    auto problem = benchmarks::pipe();
    SsrmConfig cfg = default_config(problem);
    cfg.n_mcs = 50'000;
    cfg.mcs_seed = 7;
    record_ = new RunRecord{"pipe", cfg, run_ssrm(problem, cfg), std::nullopt, 0.0};
  }
  static void TearDownTestSuite() { delete record_; }
  static RunRecord* record_;
};

RunRecord* RunRecordTest::record_ = nullptr;

TEST_F(RunRecordTest, EchoedConfigReproducesRun) {
  const json j = json::parse(to_json(*record_).dump());
  EXPECT_EQ(j.at("version"), kVersion);
  const SsrmConfig cfg = config_from_json(j.at("config"));
  const auto again = run_ssrm(benchmarks::pipe(), cfg);
  EXPECT_EQ(again.final_pf, j.at("result").at("final_pf").get<double>());
  json a = to_json(RunRecord{"pipe", cfg, again, std::nullopt, 0.0});
  a.erase("timings");
  json b = j;
  b.erase("timings");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST_F(RunRecordTest, TimingsAreSeparated) {
  const json j = to_json(*record_);
  EXPECT_TRUE(j.contains("timings"));
  EXPECT_FALSE(j.at("result").contains("timings"));
  EXPECT_TRUE(j.at("oracle").is_null());
}

TEST_F(RunRecordTest, TraceCsvLayout) {
  std::ostringstream out;
  write_trace_csv(out, record_->result);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "iteration,u_1,u_2,g,feasible,shape_c,pf");
  int rows = 0, initial = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
    if (line.starts_with("0,")) ++initial;
  }
  EXPECT_EQ(rows, record_->result.samples.size());
  EXPECT_EQ(initial, 5);
  EXPECT_EQ(rows, initial + record_->result.iterations);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

}  // namespace
}  // namespace ssrm::io

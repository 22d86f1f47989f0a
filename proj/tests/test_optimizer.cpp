#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ssrm/error.hpp"
#include "ssrm/optimizer.hpp"

#include "oracles.hpp"

namespace ssrm {
namespace {

Matrix single_row(double a, double b) {
  Matrix m(1, 2);
  m << a, b;
  return m;
}

TEST(FitnessTest, OnZeroSetFarFromSamplesIsNorm) {
  const GaConfig cfg;
  const double u[2] = {2.0, 1.0};
  EXPECT_DOUBLE_EQ(fitness(u, oracle::linear_field(), single_row(-3, -3), 0.4, cfg), std::sqrt(5.0));
}

TEST(FitnessTest, OriginPaysEqualityPenalty) {
  GaConfig cfg;
  cfg.penalty_weight_eq = 7.0;
  const double u[2] = {0.0, 0.0};
  EXPECT_DOUBLE_EQ(fitness(u, oracle::linear_field(), single_row(4, 4), 0.4, cfg), 14.0);
}

TEST(FitnessTest, DistancePenalty) {
  GaConfig cfg;
  cfg.penalty_weight_dist = 3.0;
  const double u[2] = {2.0, 0.0};
  EXPECT_DOUBLE_EQ(fitness(u, oracle::linear_field(), single_row(2.0, 0.1), 0.5, cfg),
                   2.0 + 3.0 * 0.4);
}

TEST(FitnessTest, GlobalMinimumOfLinearCaseOnGrid) {
  const GaConfig cfg;
  const Matrix far = single_row(-4.9, -4.9);
  double best = 1e300, bu = 0, bv = 0;
  for (int i = -500; i <= 500; i += 2) {
    for (int j = -500; j <= 500; j += 2) {
      const double u[2] = {i * 0.01, j * 0.01};
      const double f = fitness(u, oracle::linear_field(), far, 0.4, cfg);
      if (f < best) best = f, bu = u[0], bv = u[1];
    }
  }
  EXPECT_DOUBLE_EQ(best, 2.0);
  EXPECT_DOUBLE_EQ(bu, 2.0);
  EXPECT_DOUBLE_EQ(bv, 0.0);
}

TEST(MinDistanceTest, Basics) {
  const double u[2] = {3.0, 4.0};
  EXPECT_DOUBLE_EQ(min_distance(u, single_row(0, 0)), 5.0);
  EXPECT_TRUE(std::isinf(min_distance(u, Matrix(0, 2))));
}

TEST(ProposePointTest, UnconstrainedLinearOptimum) {
  const GaConfig cfg;
  const auto p = propose_point(oracle::linear_field(), single_row(0, 0), 0.5,
                               BoxBounds::cube(2, -5, 5), cfg);
  EXPECT_NEAR(p.u[0], 2.0, 0.05);
  EXPECT_NEAR(p.u[1], 0.0, 0.05);
  EXPECT_NEAR(p.norm, 2.0, 0.05);
  EXPECT_TRUE(p.feasible);
}

TEST(ProposePointTest, DistanceConstraintActive) {
  const GaConfig cfg;
  const auto p = propose_point(oracle::linear_field(), single_row(2, 0), 0.5,
                               BoxBounds::cube(2, -5, 5), cfg);
  EXPECT_NEAR(p.u[0], 2.0, 0.05);
  EXPECT_NEAR(std::abs(p.u[1]), 0.5, 0.05);
  EXPECT_NEAR(p.norm, std::sqrt(4.25), 0.05);
}

TEST(ProposePointTest, NoZeroSetIsFlaggedInfeasible) {
  const GaConfig cfg;
  const ScalarField one = [](std::span<const double>) { return 1.0; };
  const auto p = propose_point(one, single_row(0, 0), 0.4, BoxBounds::cube(2, -5, 5), cfg);
  EXPECT_FALSE(p.feasible);
  EXPECT_DOUBLE_EQ(p.surrogate_value, 1.0);
}

TEST(ProposePointTest, MatchesGridBruteForce) {
  const auto bounds = BoxBounds::cube(2, -5, 5);
  for (const auto& existing : {single_row(0, 0), single_row(2, 0)}) {
    const double grid = oracle::grid_optimum_norm(oracle::linear_field(), existing, 0.5, -5, 5, 0.01,
                                                  GaConfig{}.equality_tolerance);
    int ok = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      GaConfig cfg;
      cfg.seed = seed;
      const auto p = propose_point(oracle::linear_field(), existing, 0.5, bounds, cfg);
      if (std::abs(p.norm - grid) <= 0.025 * grid) ++ok;
    }
    EXPECT_GE(ok, 95);
  }
}

TEST(GaProperty, DeterministicGivenSeed) {
  GaConfig cfg;
  cfg.seed = 42;
  const auto bounds = BoxBounds::cube(2, -5, 5);
  const auto a = run_ga(oracle::linear_field(), single_row(0, 0), 0.5, bounds, cfg);
  const auto b = run_ga(oracle::linear_field(), single_row(0, 0), 0.5, bounds, cfg);
  EXPECT_EQ(a.best.u, b.best.u);
  EXPECT_EQ(a.best_fitness, b.best_fitness);
  EXPECT_EQ(a.generation_best, b.generation_best);
}

TEST(GaProperty, BestSoFarNonIncreasing) {
  const ScalarField ring = [](std::span<const double> u) { return 1.5 - std::hypot(u[0] - 1, u[1]); };
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GaConfig cfg;
    cfg.seed = seed;
    const auto out = run_ga(ring, single_row(0.5, 0), 0.4, BoxBounds::cube(2, -5, 5), cfg);
    ASSERT_EQ(out.generation_best.size(), static_cast<std::size_t>(cfg.generations + 1));
    for (std::size_t i = 1; i < out.generation_best.size(); ++i)
      EXPECT_LE(out.generation_best[i], out.generation_best[i - 1]);
  }
}

TEST(GaProperty, FeasibilityIsSound) {
  const auto bounds = BoxBounds::cube(2, -5, 5);
  const ScalarField ring = [](std::span<const double> u) { return 1.5 - std::hypot(u[0] - 1, u[1]); };
  const Matrix existing = single_row(-0.5, 0.0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GaConfig cfg;
    cfg.seed = seed;
    const auto p = propose_point(ring, existing, 0.4, bounds, cfg);
    EXPECT_DOUBLE_EQ(p.norm, std::hypot(p.u[0], p.u[1]));
    if (!p.feasible) continue;
    EXPECT_LE(std::abs(ring(p.u)), cfg.equality_tolerance);
    EXPECT_GE(min_distance(p.u, existing), 0.4);
    for (double x : p.u) {
      EXPECT_GE(x, -5.0);
      EXPECT_LE(x, 5.0);
    }
  }
}

TEST(GaConfigTest, Validation) {
  GaConfig cfg;
  cfg.population = 1;
  EXPECT_THROW(validate(cfg), ParameterError);
  cfg = GaConfig{};
  cfg.mutation_rate = 1.5;
  EXPECT_THROW(validate(cfg), ParameterError);
}

}  // namespace
}  // namespace ssrm

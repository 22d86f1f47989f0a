#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ssrm/benchmarks.hpp"
#include "ssrm/error.hpp"

namespace ssrm::benchmarks {
namespace {

std::vector<double> means(const ProblemDefinition& p) {
  std::vector<double> x;
  for (const auto& m : p.marginals) x.push_back(m.mean());
  return x;
}

TEST(LsfTest, PipeAtMean) {
  EXPECT_NEAR(lsf_pipe(301.079e6, 0.503), 374223.8973546759, 1e-6);
  EXPECT_NEAR(pipe().lsf(means(pipe())), 374223.8973546759, 1e-6);
}

TEST(LsfTest, PipeBracketVanishes) {
  EXPECT_NEAR(lsf_pipe(301.079e6, std::numbers::pi), -3e6, 1e-3);
}

TEST(LsfTest, Cubic) {
  EXPECT_DOUBLE_EQ(lsf_cubic(0.5, 0.5), 0.75);
  EXPECT_DOUBLE_EQ(lsf_cubic(1.0, 0.0), 0.0);
}

TEST(LsfTest, BeamAtMeanAndDomain) {
  EXPECT_NEAR(lsf_beam(1000.0, 250.0), 13.67630928, 1e-9);
  EXPECT_THROW(lsf_beam(1000.0, 0.0), DomainError);
}

TEST(LsfTest, ReducerAtMeanAndDomain) {
  EXPECT_NEAR(reducer().lsf(means(reducer())), 24.937129513542274, 1e-9);
  EXPECT_THROW(lsf_reducer(0.0, 400, 1500, 250000, 75), DomainError);
}

TEST(LsfTest, TubeIntermediates) {
  const auto s = tube_stress(5, 42, 120, 60, 3000, 3000, 12000, 90000, 220);
  EXPECT_NEAR(s.inertia, 101273.16617928397, 1e-6);
  EXPECT_DOUBLE_EQ(s.polar_inertia, 2.0 * s.inertia);
  EXPECT_NEAR(s.area, 581.1946409141117, 1e-9);
  EXPECT_NEAR(s.g, 85.90583382451308, 1e-9);
  EXPECT_NEAR(tube().lsf(means(tube())), 85.90583382451308, 1e-9);
  EXPECT_THROW(lsf_tube(25, 42, 120, 60, 3000, 3000, 12000, 90000, 220), DomainError);
  EXPECT_NE(lsf_tube(5, 42, 120, 60, 3000, 3000, 12000, 90000, 220, TubeAxialAngle::Theta1AsPrinted),
            s.g);
}

TEST(LsfTest, Oscillator) {
  EXPECT_NEAR(lsf_oscillator(1.0, 0.1, 1.0, 0.5, 1.0, 0.5), 1.0448204093516094, 1e-12);
  EXPECT_THROW(lsf_oscillator(1.0, 0.1, 0.0, 0.5, 1.0, 0.5), DomainError);
  // Problem inputs are ordered m, c1, c2, r, F1, t1.
  const std::vector<double> x{1.0, 1.0, 0.1, 0.5, 0.5, 1.0};
  EXPECT_NEAR(oscillator().lsf(x), 1.0448204093516094, 1e-12);
  EXPECT_DOUBLE_EQ(lsf_oscillator(1.0, 0.1, 1.0, 0.5, 1.0, 0.0), 1.5);
}

TEST(RegistryTest, MarginalComposition) {
  auto count = [](const ProblemDefinition& p, DistributionKind k) {
    return std::count_if(p.marginals.begin(), p.marginals.end(),
                         [k](const Marginal& m) { return m.kind == k; });
  };
  const auto t = tube();
  EXPECT_EQ(t.dimension(), 9u);
  EXPECT_EQ(count(t, DistributionKind::Uniform), 2);
  EXPECT_EQ(count(t, DistributionKind::GumbelMax), 1);
  EXPECT_EQ(count(t, DistributionKind::Normal), 6);
  EXPECT_EQ(count(pipe(), DistributionKind::Normal), 2);
}

TEST(RegistryTest, SixSortedProblems) {
  const auto names = problem_names();
  EXPECT_EQ(names, (std::vector<std::string>{"beam", "cubic", "oscillator", "pipe", "reducer", "tube"}));
  for (const auto& n : names) {
    const auto p = get_problem(n);
    EXPECT_EQ(p.name, n);
    EXPECT_NO_THROW(validate(p));
    EXPECT_EQ(p.variable_names.size(), p.dimension());
    EXPECT_TRUE(p.reference.has_value());
    EXPECT_GT(p.lsf(means(p)), 0.0) << n;
  }
  EXPECT_THROW(get_problem("nosuch"), LookupError);
}

TEST(RegistryTest, InitialDesignFlags) {
  EXPECT_TRUE(pipe().large_std);
  EXPECT_FALSE(cubic().large_std);
  EXPECT_TRUE(beam().large_std);
  EXPECT_FALSE(reducer().large_std);
  EXPECT_FALSE(tube().large_std);
  EXPECT_TRUE(oscillator().large_std);
}

TEST(RegistryTest, WrongArity) {
  EXPECT_THROW(pipe().lsf(std::vector<double>{1.0}), ShapeError);
}

}  // namespace
}  // namespace ssrm::benchmarks

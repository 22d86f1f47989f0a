#pragma once

#include <cstdint>
#include <optional>

#include "ssrm/optimizer.hpp"
#include "ssrm/problem.hpp"
#include "ssrm/surrogate.hpp"
#include "ssrm/types.hpp"

namespace ssrm {

struct PfEstimate {
  double pf = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t n_failures = 0;
  /// sqrt((1 - pf) / (pf n)); absent when no failure was observed.
  std::optional<double> cov;
  std::uint64_t seed = 0;

  friend bool operator==(const PfEstimate&, const PfEstimate&) = default;
};

PfEstimate make_estimate(std::uint64_t n_failures, std::uint64_t n_samples, std::uint64_t seed);

/// Binomial standard error sqrt(p (1 - p) / n).
double binomial_standard_error(double p, std::uint64_t n);

/// n x m standard-normal sample; entry (i, j) is draw i*m + j of the seeded
/// counter stream, so the matrix does not depend on how it is generated.
Matrix standard_normal_sample(std::uint64_t n, Eigen::Index m, std::uint64_t seed, int threads = 1);

/// Fraction of rows of `samples` where the surrogate predicts <= 0.
PfEstimate estimate_pf(const RbfSurrogate& surrogate, const Matrix& samples, std::uint64_t seed,
                       int threads = 1);

/// Draws n standard-normal points in R^m from `seed` and counts surrogate failures.
PfEstimate estimate_pf_surrogate(const RbfSurrogate& surrogate, std::uint64_t n, Eigen::Index m,
                                 std::uint64_t seed, int threads = 1);
PfEstimate estimate_pf_surrogate(const ScalarField& field, std::uint64_t n, Eigen::Index m,
                                 std::uint64_t seed, int threads = 1);

/// Direct Monte Carlo on the true limit state: u ~ N(0, I), x = from_u(u), fail if g(x) <= 0.
/// Evaluation errors surface as LsfEvaluationError carrying the sample index.
PfEstimate estimate_pf_direct(const ProblemDefinition& problem, std::uint64_t n, std::uint64_t seed,
                              int threads = 1);

}  // namespace ssrm

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssrm/doe.hpp"
#include "ssrm/error.hpp"
#include "ssrm/mcs.hpp"
#include "ssrm/optimizer.hpp"
#include "ssrm/problem.hpp"
#include "ssrm/surrogate.hpp"
#include "ssrm/types.hpp"

namespace ssrm {

enum class InitialSizeRule { MPlusOne, TwoMPlusOne };

std::string_view to_string(InitialSizeRule rule);
InitialSizeRule initial_size_rule_from_string(std::string_view name);

struct SsrmConfig {
  double d_min = 0.4;
  double eps_a = 5e-4;
  double eps_r = 0.02;
  /// Number of consecutive iterations the convergence test must pass.
  int consecutive_passes = 2;
  int k_max = 50;
  std::uint64_t n_mcs = 1'000'000;
  std::uint64_t mcs_seed = 2;
  std::uint64_t lhs_seed = 1;
  InitialSizeRule initial_size_rule = InitialSizeRule::MPlusOne;
  /// U-space search box; lower/upper scalars applied to every coordinate.
  double bound_lower = -5.0;
  double bound_upper = 5.0;
  KernelKind kernel = KernelKind::Gaussian;
  ShapeSearch shape_search;
  /// GA settings. equality_tolerance and penalty_weight_eq are relative: the
  /// engine uses equality_tolerance * s and penalty_weight_eq / s, where s is
  /// max |g| over the current samples. ga.seed + k seeds iteration k.
  GaConfig ga;
  /// Worker threads for MCS; results do not depend on it.
  int threads = 1;

  BoxBounds bounds(Eigen::Index m) const { return BoxBounds::cube(m, bound_lower, bound_upper); }
};

void validate(const SsrmConfig& cfg);

/// Engine defaults with the problem's initial-size flag and overrides applied.
SsrmConfig default_config(const ProblemDefinition& problem);

Eigen::Index initial_size(InitialSizeRule rule, Eigen::Index m);

/// The growing design: U-space inputs, true limit state values and the
/// iteration that added each row (0 for the initial design).
class SampleSet {
 public:
  explicit SampleSet(Eigen::Index m = 0) : u_(0, m) {}

  void append(std::span<const double> u, double g, int iteration);

  const Matrix& u() const { return u_; }
  const Vector& g() const { return g_; }
  const std::vector<int>& iteration() const { return iteration_; }
  Eigen::Index size() const { return u_.rows(); }
  Eigen::Index dimension() const { return u_.cols(); }

  friend bool operator==(const SampleSet& a, const SampleSet& b) {
    return a.u_ == b.u_ && a.g_ == b.g_ && a.iteration_ == b.iteration_;
  }

 private:
  Matrix u_;
  Vector g_;
  std::vector<int> iteration_;
};

enum class StopReason { Converged, KMax };

std::string_view to_string(StopReason reason);

struct IterationRecord {
  int iteration = 0;
  std::vector<double> added_u;
  double added_g = 0.0;
  bool feasible = false;
  /// The proposal coincided with an existing sample and was moved by one mutation step.
  bool perturbed = false;
  double candidate_surrogate_value = 0.0;
  double candidate_min_dist = 0.0;
  double shape_c = 0.0;
  double loocv = 0.0;
  double pf = 0.0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct PhaseTimings {
  double initial_design_s = 0.0;
  double fit_s = 0.0;
  double propose_s = 0.0;
  double lsf_s = 0.0;
  double mcs_s = 0.0;
};

struct SsrmRunResult {
  std::vector<double> pf_history;
  double final_pf = 0.0;
  SampleSet samples;
  std::int64_t n_lsf_evals = 0;
  int iterations = 0;
  StopReason converged_by = StopReason::KMax;
  double initial_shape_c = 0.0;
  double initial_loocv = 0.0;
  std::vector<IterationRecord> per_iteration;
  /// Wall-clock only; not part of the reproducible result.
  PhaseTimings timings;
};

/// Thrown when a run cannot continue; carries the trace up to the failure.
class SsrmAborted : public Error {
 public:
  SsrmAborted(const std::string& cause, SsrmRunResult partial)
      : Error("SSRM run aborted: " + cause), partial_(std::move(partial)) {}
  const SsrmRunResult& partial() const { return partial_; }

 private:
  SsrmRunResult partial_;
};

enum class ConvergenceDecision { Continue, StopConverged, StopKMax };

/// Single-step stop test after the k-th added point.
ConvergenceDecision check_convergence(double pf_prev, double pf_next, int k, const SsrmConfig& cfg);

/// Runs the sequential surrogate reliability method on `problem`.
SsrmRunResult run_ssrm(const ProblemDefinition& problem, const SsrmConfig& cfg);

}  // namespace ssrm

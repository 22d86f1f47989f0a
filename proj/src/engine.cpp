#include "ssrm/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "ssrm/random.hpp"

namespace ssrm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Coincident proposals are nudged by Gaussian steps of the GA mutation size.
constexpr double kCoincidentDistance = 1e-9;

struct Fitted {
  RbfSurrogate surrogate;
  ShapeSelection shape;
};

Fitted fit_surrogate(const SampleSet& samples, const SsrmConfig& cfg) {
  const auto shape = select_shape(samples.u(), samples.g(), cfg.kernel, cfg.shape_search);
  return {RbfSurrogate::fit(samples.u(), samples.g(), cfg.kernel, shape.shape_c), shape};
}

}  // namespace

std::string_view to_string(InitialSizeRule rule) {
  return rule == InitialSizeRule::MPlusOne ? "m_plus_one" : "two_m_plus_one";
}

InitialSizeRule initial_size_rule_from_string(std::string_view name) {
  if (name == "m_plus_one") return InitialSizeRule::MPlusOne;
  if (name == "two_m_plus_one") return InitialSizeRule::TwoMPlusOne;
  throw ParameterError("unknown initial size rule '" + std::string(name) + "'");
}

std::string_view to_string(StopReason reason) {
  return reason == StopReason::Converged ? "converged" : "k_max";
}

void validate(const SsrmConfig& cfg) {
  if (!(cfg.eps_a > 0.0) || !(cfg.eps_r > 0.0)) {
    throw ParameterError("convergence tolerances must be positive");
  }
  if (cfg.k_max < 1) throw ParameterError("k_max must be at least 1");
  if (!(cfg.d_min > 0.0)) throw ParameterError("d_min must be positive");
  if (cfg.consecutive_passes < 1) throw ParameterError("consecutive_passes must be at least 1");
  if (cfg.n_mcs < 1) throw ParameterError("n_mcs must be positive");
  if (!(cfg.bound_lower < cfg.bound_upper)) throw ParameterError("bounds must satisfy lower < upper");
  if (cfg.threads < 1) throw ParameterError("threads must be positive");
  validate(cfg.ga);
}

SsrmConfig default_config(const ProblemDefinition& problem) {
  SsrmConfig cfg;
  cfg.initial_size_rule =
      problem.large_std ? InitialSizeRule::TwoMPlusOne : InitialSizeRule::MPlusOne;
  const auto& o = problem.overrides;
  if (o.d_min) cfg.d_min = *o.d_min;
  if (o.eps_a) cfg.eps_a = *o.eps_a;
  if (o.eps_r) cfg.eps_r = *o.eps_r;
  if (o.k_max) cfg.k_max = *o.k_max;
  if (o.n_mcs) cfg.n_mcs = *o.n_mcs;
  return cfg;
}

Eigen::Index initial_size(InitialSizeRule rule, Eigen::Index m) {
  return rule == InitialSizeRule::MPlusOne ? m + 1 : 2 * m + 1;
}

void SampleSet::append(std::span<const double> u, double g, int iteration) {
  if (static_cast<Eigen::Index>(u.size()) != dimension()) {
    throw ShapeError("SampleSet::append: dimension mismatch");
  }
  if (!std::isfinite(g)) throw DomainError("SampleSet::append: non-finite limit state value");
  const Eigen::Index n = size();
  u_.conservativeResize(n + 1, Eigen::NoChange);
  g_.conservativeResize(n + 1);
  for (Eigen::Index j = 0; j < dimension(); ++j) u_(n, j) = u[static_cast<std::size_t>(j)];
  g_[n] = g;
  iteration_.push_back(iteration);
}

ConvergenceDecision check_convergence(double pf_prev, double pf_next, int k, const SsrmConfig& cfg) {
  if (k >= cfg.k_max) return ConvergenceDecision::StopKMax;
  const double delta = std::abs(pf_next - pf_prev);
  const bool absolute = delta <= cfg.eps_a;
  const bool relative = pf_next == 0.0 ? delta == 0.0 : delta / std::abs(pf_next) <= cfg.eps_r;
  return absolute && relative ? ConvergenceDecision::StopConverged : ConvergenceDecision::Continue;
}

SsrmRunResult run_ssrm(const ProblemDefinition& problem, const SsrmConfig& cfg) {
  validate(problem);
  validate(cfg);
  const auto m = static_cast<Eigen::Index>(problem.dimension());
  const BoxBounds bounds = cfg.bounds(m);

  SsrmRunResult result;
  result.samples = SampleSet(m);

  auto evaluate = [&](std::span<const double> u) {
    const auto start = Clock::now();
    double g = 0.0;
    try {
      g = problem.evaluate_u(u);
    } catch (const std::exception& e) {
      throw SsrmAborted(std::string("limit state evaluation failed: ") + e.what(), result);
    }
    if (!std::isfinite(g)) throw SsrmAborted("limit state returned a non-finite value", result);
    result.timings.lsf_s += seconds_since(start);
    return g;
  };

  auto refit = [&]() {
    const auto start = Clock::now();
    try {
      auto fitted = fit_surrogate(result.samples, cfg);
      result.timings.fit_s += seconds_since(start);
      return fitted;
    } catch (const Error& e) {
      throw SsrmAborted(e.what(), result);
    }
  };

  // Initial Latin hypercube design.
  auto start = Clock::now();
  const Matrix design =
      lhs_sample(initial_size(cfg.initial_size_rule, m), m, bounds, cfg.lhs_seed);
  result.timings.initial_design_s = seconds_since(start);
  for (Eigen::Index i = 0; i < design.rows(); ++i) {
    const std::span<const double> u(design.row(i).data(), static_cast<std::size_t>(m));
    result.samples.append(u, evaluate(u), 0);
  }
  result.n_lsf_evals = result.samples.size();

  // One fixed standard-normal sample for every estimate in the run.
  start = Clock::now();
  const Matrix mcs_sample = standard_normal_sample(cfg.n_mcs, m, cfg.mcs_seed, cfg.threads);
  result.timings.mcs_s += seconds_since(start);

  auto estimate = [&](const RbfSurrogate& s) {
    const auto t0 = Clock::now();
    const double pf = estimate_pf(s, mcs_sample, cfg.mcs_seed, cfg.threads).pf;
    result.timings.mcs_s += seconds_since(t0);
    return pf;
  };

  Fitted fitted = refit();
  result.initial_shape_c = fitted.shape.shape_c;
  result.initial_loocv = fitted.shape.loocv;
  double pf = estimate(fitted.surrogate);
  result.pf_history.push_back(pf);
  result.final_pf = pf;

  int passes = 0;
  for (int k = 1;; ++k) {
    // Penalties and the boundary tolerance follow the current output scale.
    const double scale = std::max(result.samples.g().cwiseAbs().maxCoeff(), 1e-300);
    GaConfig ga = cfg.ga;
    ga.equality_tolerance = cfg.ga.equality_tolerance * scale;
    ga.penalty_weight_eq = cfg.ga.penalty_weight_eq / scale;
    ga.seed = cfg.ga.seed + static_cast<std::uint64_t>(k);

    start = Clock::now();
    CandidatePoint candidate =
        propose_point(fitted.surrogate, result.samples.u(), cfg.d_min, bounds, ga);
    result.timings.propose_s += seconds_since(start);

    IterationRecord record;
    record.iteration = k;
    if (candidate.min_dist < kCoincidentDistance) {
      CounterRng nudge(ga.seed, 1ULL << 40);
      while (min_distance(candidate.u, result.samples.u()) < kCoincidentDistance) {
        for (Eigen::Index j = 0; j < m; ++j) {
          const double width = bounds.upper[j] - bounds.lower[j];
          auto& v = candidate.u[static_cast<std::size_t>(j)];
          v = std::clamp(v + ga.mutation_scale * width * nudge.next_normal(), bounds.lower[j],
                         bounds.upper[j]);
        }
      }
      candidate = evaluate_candidate(candidate.u, as_field(fitted.surrogate), result.samples.u(),
                                     cfg.d_min, bounds, ga);
      record.perturbed = true;
    }

    const double g = evaluate(candidate.u);
    result.samples.append(candidate.u, g, k);
    result.n_lsf_evals = result.samples.size();

    fitted = refit();
    const double pf_next = estimate(fitted.surrogate);

    record.added_u = candidate.u;
    record.added_g = g;
    record.feasible = candidate.feasible;
    record.candidate_surrogate_value = candidate.surrogate_value;
    record.candidate_min_dist = candidate.min_dist;
    record.shape_c = fitted.shape.shape_c;
    record.loocv = fitted.shape.loocv;
    record.pf = pf_next;
    result.per_iteration.push_back(record);
    result.pf_history.push_back(pf_next);
    result.iterations = k;
    result.final_pf = pf_next;

    const auto decision = check_convergence(pf, pf_next, k, cfg);
    pf = pf_next;
    if (decision == ConvergenceDecision::StopKMax) {
      result.converged_by = StopReason::KMax;
      break;
    }
    passes = decision == ConvergenceDecision::StopConverged ? passes + 1 : 0;
    if (passes >= cfg.consecutive_passes) {
      result.converged_by = StopReason::Converged;
      break;
    }
  }
  return result;
}

}  // namespace ssrm

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ssrm/doe.hpp"
#include "ssrm/surrogate.hpp"
#include "ssrm/types.hpp"

namespace ssrm {

/// Any scalar field over U-space; an RbfSurrogate is the usual one.
using ScalarField = std::function<double(std::span<const double>)>;

ScalarField as_field(const RbfSurrogate& surrogate);

struct GaConfig {
  int population = 60;
  int generations = 120;
  double crossover_rate = 0.9;
  double blend_alpha = 0.5;
  double mutation_rate = 0.15;
  /// Mutation standard deviation as a fraction of the box width.
  double mutation_scale = 0.1;
  /// |G(u)| at or below this counts as on the boundary.
  double equality_tolerance = 1e-3;
  double penalty_weight_eq = 10.0;
  double penalty_weight_dist = 10.0;
  std::uint64_t seed = 3;
};

void validate(const GaConfig& cfg);

struct CandidatePoint {
  std::vector<double> u;
  double norm = 0.0;
  double surrogate_value = 0.0;
  /// Distance to the nearest existing sample; +inf when there are none.
  double min_dist = 0.0;
  bool feasible = false;
};

/// Distance from u to the closest row of `existing` (+inf for an empty set).
double min_distance(std::span<const double> u, const Matrix& existing);

/// Penalized objective ||u|| + w_eq |G(u)| + w_dist max(0, d_min - min_dist); lower is better.
double fitness(std::span<const double> u, const ScalarField& surrogate, const Matrix& existing,
               double d_min, const GaConfig& cfg);

/// Evaluates u against the add-point constraints.
CandidatePoint evaluate_candidate(std::span<const double> u, const ScalarField& surrogate,
                                  const Matrix& existing, double d_min, const BoxBounds& bounds,
                                  const GaConfig& cfg);

struct GaOutcome {
  CandidatePoint best;
  double best_fitness = 0.0;
  /// Best fitness of the population after each generation (index 0 is the initial population).
  std::vector<double> generation_best;
};

/// Real-coded GA: tournament selection, blend crossover, Gaussian mutation, one elite.
GaOutcome run_ga(const ScalarField& surrogate, const Matrix& existing, double d_min,
                 const BoxBounds& bounds, const GaConfig& cfg);

/// Solves the add-point subproblem: minimum ||u|| on G(u) = 0 at least d_min away
/// from every existing sample. Returns the best point found; an infeasible best is
/// flagged, not an error.
CandidatePoint propose_point(const ScalarField& surrogate, const Matrix& existing, double d_min,
                             const BoxBounds& bounds, const GaConfig& cfg);
CandidatePoint propose_point(const RbfSurrogate& surrogate, const Matrix& existing, double d_min,
                             const BoxBounds& bounds, const GaConfig& cfg);

}  // namespace ssrm

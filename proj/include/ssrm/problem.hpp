#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssrm/distributions.hpp"

namespace ssrm {

/// g(x) in physical X-space; g <= 0 is failure.
using LimitStateFunction = std::function<double(std::span<const double>)>;

/// Reference direct Monte Carlo result for a problem.
struct ReferenceResult {
  double pf;
  std::uint64_t n_samples;
};

/// Per-problem defaults applied on top of the global engine defaults.
struct SsrmOverrides {
  std::optional<double> d_min;
  std::optional<double> eps_a;
  std::optional<double> eps_r;
  std::optional<int> k_max;
  std::optional<std::uint64_t> n_mcs;
};

struct ProblemDefinition {
  std::string name;
  std::string description;
  std::vector<std::string> variable_names;
  std::vector<Marginal> marginals;
  LimitStateFunction lsf;
  /// Initial design of 2m+1 points instead of m+1.
  bool large_std = false;
  std::map<std::string, double> constants;
  std::optional<ReferenceResult> reference;
  SsrmOverrides overrides;

  std::size_t dimension() const { return marginals.size(); }
  /// Limit state value at a U-space point.
  double evaluate_u(std::span<const double> u) const;
};

/// Throws ParameterError if the definition is incomplete or inconsistent.
void validate(const ProblemDefinition& p);

}  // namespace ssrm

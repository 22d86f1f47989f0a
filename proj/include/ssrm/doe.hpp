#pragma once

#include <cstdint>

#include "ssrm/types.hpp"

namespace ssrm {

struct BoxBounds {
  Vector lower;
  Vector upper;

  /// [lo, hi]^m.
  static BoxBounds cube(Eigen::Index m, double lo, double hi);

  Eigen::Index dimension() const { return lower.size(); }
  bool contains(const Eigen::Ref<const Eigen::RowVectorXd>& u) const;
};

/// Throws ParameterError unless lower < upper componentwise.
void validate(const BoxBounds& bounds);

/// Latin hypercube design: each column holds one point per stratum, uniformly
/// placed inside it. Deterministic given the seed.
Matrix lhs_sample(Eigen::Index n, Eigen::Index m, const BoxBounds& bounds, std::uint64_t seed);

}  // namespace ssrm

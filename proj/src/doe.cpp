#include "ssrm/doe.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ssrm/error.hpp"
#include "ssrm/random.hpp"

namespace ssrm {

BoxBounds BoxBounds::cube(Eigen::Index m, double lo, double hi) {
  BoxBounds b{Vector::Constant(m, lo), Vector::Constant(m, hi)};
  validate(b);
  return b;
}

bool BoxBounds::contains(const Eigen::Ref<const Eigen::RowVectorXd>& u) const {
  if (u.size() != dimension()) return false;
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    if (!(u[j] >= lower[j] && u[j] <= upper[j])) return false;
  }
  return true;
}

void validate(const BoxBounds& bounds) {
  if (bounds.lower.size() != bounds.upper.size() || bounds.lower.size() == 0) {
    throw ParameterError("box bounds must be nonempty and of equal dimension");
  }
  for (Eigen::Index j = 0; j < bounds.lower.size(); ++j) {
    if (!std::isfinite(bounds.lower[j]) || !std::isfinite(bounds.upper[j]) ||
        !(bounds.lower[j] < bounds.upper[j])) {
      throw ParameterError("box bounds: lower must be below upper in coordinate " +
                           std::to_string(j));
    }
  }
}

Matrix lhs_sample(Eigen::Index n, Eigen::Index m, const BoxBounds& bounds, std::uint64_t seed) {
  if (n < 1 || m < 1) throw ParameterError("lhs_sample: n and m must be positive");
  validate(bounds);
  if (bounds.dimension() != m) throw ParameterError("lhs_sample: bounds dimension mismatch");

  CounterRng rng(seed);
  Matrix design(n, m);
  std::vector<Eigen::Index> strata(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < m; ++j) {
    std::iota(strata.begin(), strata.end(), Eigen::Index{0});
    for (std::size_t i = strata.size(); i > 1; --i) {
      std::swap(strata[i - 1], strata[rng.next_below(i)]);
    }
    const double width = (bounds.upper[j] - bounds.lower[j]) / static_cast<double>(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double offset = rng.next_uniform();
      design(i, j) = bounds.lower[j] + (static_cast<double>(strata[static_cast<std::size_t>(i)]) + offset) * width;
    }
  }
  return design;
}

}  // namespace ssrm

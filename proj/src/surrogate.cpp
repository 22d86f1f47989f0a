#include "ssrm/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "ssrm/error.hpp"

namespace ssrm {

namespace {

void check_shape_parameter(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("RBF shape parameter must be positive and finite, got " +
                         std::to_string(c));
  }
}

// Kernel as a function of squared distance.
double kernel_sq(KernelKind kind, double r2, double c) {
  switch (kind) {
    case KernelKind::Gaussian:
      return std::exp(-c * r2);
    case KernelKind::InverseMultiquadric:
      return 1.0 / std::sqrt(r2 + c * c);
    case KernelKind::ThinPlateSpline:
      return r2 * std::log1p(c * r2);
  }
  return 0.0;
}

void check_inputs(const Matrix& centers, const Vector& outputs) {
  if (centers.rows() < 1 || centers.cols() < 1) {
    throw ShapeError("RBF fit requires at least one center of dimension >= 1");
  }
  if (outputs.size() != centers.rows()) {
    throw ShapeError("RBF fit: " + std::to_string(outputs.size()) + " outputs for " +
                     std::to_string(centers.rows()) + " centers");
  }
  if (!centers.allFinite() || !outputs.allFinite()) {
    throw ParameterError("RBF fit: non-finite sample data");
  }
}

void check_distinct(const Matrix& centers) {
  for (Eigen::Index i = 0; i < centers.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < centers.rows(); ++j) {
      if (centers.row(i) == centers.row(j)) {
        throw DuplicateCenterError(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }
}

Eigen::MatrixXd interpolation_matrix(const Matrix& centers, KernelKind kind, double c) {
  const Eigen::Index n = centers.rows();
  Eigen::MatrixXd f(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    f(i, i) = kernel_sq(kind, 0.0, c);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double r2 = (centers.row(i) - centers.row(j)).squaredNorm();
      f(i, j) = f(j, i) = kernel_sq(kind, r2, c);
    }
  }
  return f;
}

Eigen::PartialPivLU<Eigen::MatrixXd> factorize(const Eigen::MatrixXd& f) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(f);
  const double rcond = lu.rcond();
  if (!(rcond >= kMinReciprocalCondition)) throw IllConditionedError(rcond);
  return lu;
}

}  // namespace

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::Gaussian:
      return "gaussian";
    case KernelKind::InverseMultiquadric:
      return "inverse_multiquadric";
    case KernelKind::ThinPlateSpline:
      return "thin_plate_spline";
  }
  return "unknown";
}

KernelKind kernel_kind_from_string(std::string_view name) {
  if (name == "gaussian") return KernelKind::Gaussian;
  if (name == "inverse_multiquadric") return KernelKind::InverseMultiquadric;
  if (name == "thin_plate_spline") return KernelKind::ThinPlateSpline;
  throw ParameterError("unknown kernel '" + std::string(name) + "'");
}

double kernel_value(KernelKind kind, double r, double c) {
  check_shape_parameter(c);
  if (!(r >= 0.0)) throw ParameterError("kernel radius must be nonnegative");
  return kernel_sq(kind, r * r, c);
}

RbfSurrogate RbfSurrogate::fit(const Matrix& centers, const Vector& outputs, KernelKind kind,
                               double shape_c) {
  check_shape_parameter(shape_c);
  check_inputs(centers, outputs);
  check_distinct(centers);

  const auto lu = factorize(interpolation_matrix(centers, kind, shape_c));

  RbfSurrogate s;
  s.centers_ = centers;
  s.outputs_ = outputs;
  s.coefficients_ = lu.solve(outputs);
  s.center_sq_norms_ = centers.rowwise().squaredNorm();
  s.kernel_ = kind;
  s.shape_c_ = shape_c;
  s.rcond_ = lu.rcond();
  return s;
}

double RbfSurrogate::predict(std::span<const double> u) const {
  if (static_cast<Eigen::Index>(u.size()) != dimension()) {
    throw ShapeError("predict: point has dimension " + std::to_string(u.size()) +
                     ", surrogate has " + std::to_string(dimension()));
  }
  const Eigen::Map<const Eigen::RowVectorXd> p(u.data(), static_cast<Eigen::Index>(u.size()));
  double sum = 0.0;
  for (Eigen::Index i = 0; i < size(); ++i) {
    sum += coefficients_[i] * kernel_sq(kernel_, (centers_.row(i) - p).squaredNorm(), shape_c_);
  }
  return sum;
}

void RbfSurrogate::predict_batch(const Matrix& points, std::span<double> out) const {
  if (points.cols() != dimension()) throw ShapeError("predict_batch: dimension mismatch");
  if (static_cast<Eigen::Index>(out.size()) != points.rows()) {
    throw ShapeError("predict_batch: output size mismatch");
  }
  // Squared distances through |p|^2 + |x|^2 - 2 p.x, in fixed-size blocks.
  constexpr Eigen::Index kBlock = 1024;
  Eigen::MatrixXd d2;
  for (Eigen::Index start = 0; start < points.rows(); start += kBlock) {
    const Eigen::Index rows = std::min(kBlock, points.rows() - start);
    const auto block = points.middleRows(start, rows);
    d2.noalias() = -2.0 * block * centers_.transpose();
    d2.colwise() += block.rowwise().squaredNorm();
    d2.rowwise() += center_sq_norms_.transpose();
    for (Eigen::Index r = 0; r < rows; ++r) {
      double sum = 0.0;
      for (Eigen::Index i = 0; i < size(); ++i) {
        sum += coefficients_[i] * kernel_sq(kernel_, std::max(d2(r, i), 0.0), shape_c_);
      }
      out[static_cast<std::size_t>(start + r)] = sum;
    }
  }
}

double loocv_error(const Matrix& centers, const Vector& outputs, KernelKind kind, double shape_c) {
  check_shape_parameter(shape_c);
  check_inputs(centers, outputs);
  if (centers.rows() < 2) {
    throw InsufficientSamplesError("LOOCV needs at least two samples");
  }
  check_distinct(centers);
  const auto lu = factorize(interpolation_matrix(centers, kind, shape_c));
  const Eigen::MatrixXd inverse = lu.inverse();
  const Vector beta = inverse * outputs;
  double total = 0.0;
  for (Eigen::Index i = 0; i < centers.rows(); ++i) {
    const double residual = beta[i] / inverse(i, i);
    total += residual * residual;
  }
  return total;
}

double shape_scale(const Matrix& centers, KernelKind kind) {
  std::vector<double> d2;
  for (Eigen::Index i = 0; i < centers.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < centers.rows(); ++j) {
      d2.push_back((centers.row(i) - centers.row(j)).squaredNorm());
    }
  }
  if (d2.empty()) return 1.0;
  const auto mid = d2.begin() + static_cast<std::ptrdiff_t>(d2.size() / 2);
  std::nth_element(d2.begin(), mid, d2.end());
  double median = *mid;
  if (d2.size() % 2 == 0) {
    median = 0.5 * (median + *std::max_element(d2.begin(), mid));
  }
  if (!(median > 0.0)) return 1.0;
  return kind == KernelKind::InverseMultiquadric ? std::sqrt(median) : 1.0 / median;
}

ShapeSelection select_shape(const Matrix& centers, const Vector& outputs, KernelKind kind,
                            const ShapeSearch& search) {
  if (centers.rows() < 2) {
    throw InsufficientSamplesError("shape selection needs at least two samples");
  }
  if (search.grid_points < 2 || !(search.log10_upper > search.log10_lower)) {
    throw ParameterError("shape search grid is empty");
  }
  check_inputs(centers, outputs);
  check_distinct(centers);

  const double log_scale = std::log10(shape_scale(centers, kind));
  auto objective = [&](double log10_c) {
    try {
      const double value = loocv_error(centers, outputs, kind, std::pow(10.0, log10_c));
      return std::isfinite(value) ? value : std::numeric_limits<double>::infinity();
    } catch (const IllConditionedError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  const int n = search.grid_points;
  const double step = (search.log10_upper - search.log10_lower) / (n - 1);
  std::vector<double> grid(static_cast<std::size_t>(n));
  std::vector<double> values(grid.size());
  int best = -1;
  for (int k = 0; k < n; ++k) {
    grid[k] = log_scale + search.log10_lower + k * step;
    values[k] = objective(grid[k]);
    if (values[k] < std::numeric_limits<double>::infinity() && (best < 0 || values[k] < values[best])) {
      best = k;
    }
  }
  if (best < 0) {
    throw ShapeSelectionError("every shape-parameter candidate is ill-conditioned");
  }

  double best_log = grid[best];
  double best_value = values[best];

  // Golden-section search on the bracket formed by the neighbouring grid nodes.
  constexpr double kInvPhi = 0.61803398874989484820;
  double a = grid[std::max(best - 1, 0)];
  double b = grid[std::min(best + 1, n - 1)];
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  for (int it = 0; it < search.refine_iterations; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = objective(x2);
    }
  }
  const double refined_log = f1 <= f2 ? x1 : x2;
  const double refined_value = std::min(f1, f2);
  if (refined_value < best_value) {
    best_log = refined_log;
    best_value = refined_value;
  }
  return {std::pow(10.0, best_log), best_value};
}

}  // namespace ssrm

#pragma once

#include <span>
#include <string_view>

#include "ssrm/types.hpp"

namespace ssrm {

enum class KernelKind { Gaussian, InverseMultiquadric, ThinPlateSpline };

std::string_view to_string(KernelKind kind);
KernelKind kernel_kind_from_string(std::string_view name);

/// Radial basis function value at distance r with shape parameter c.
double kernel_value(KernelKind kind, double r, double c);

/// Reciprocal condition estimates below this are rejected as singular.
inline constexpr double kMinReciprocalCondition = 1e-12;

/// Interpolating RBF expansion y(u) = sum_i beta_i f(||u - x_i||), no polynomial tail.
/// Immutable once fitted; concurrent predict calls are safe.
class RbfSurrogate {
 public:
  /// Solves F beta = y. Throws DuplicateCenterError, IllConditionedError,
  /// ShapeError or ParameterError.
  static RbfSurrogate fit(const Matrix& centers, const Vector& outputs, KernelKind kind,
                          double shape_c);

  double predict(std::span<const double> u) const;

  /// Predicts every row of `points` into `out`.
  void predict_batch(const Matrix& points, std::span<double> out) const;

  const Matrix& centers() const { return centers_; }
  const Vector& coefficients() const { return coefficients_; }
  const Vector& outputs() const { return outputs_; }
  KernelKind kernel() const { return kernel_; }
  double shape_c() const { return shape_c_; }
  double reciprocal_condition() const { return rcond_; }
  Eigen::Index size() const { return centers_.rows(); }
  Eigen::Index dimension() const { return centers_.cols(); }

 private:
  RbfSurrogate() = default;

  Matrix centers_;
  Vector coefficients_;
  Vector outputs_;
  Vector center_sq_norms_;
  KernelKind kernel_ = KernelKind::Gaussian;
  double shape_c_ = 1.0;
  double rcond_ = 1.0;
};

/// Sum of squared leave-one-out residuals, via residual_i = beta_i / (F^-1)_ii.
double loocv_error(const Matrix& centers, const Vector& outputs, KernelKind kind, double shape_c);

/// Shape search: a log-spaced grid over [10^log10_lower, 10^log10_upper] times a
/// data-dependent scale, then golden-section refinement in log c around the best node.
struct ShapeSearch {
  int grid_points = 25;
  double log10_lower = -3.0;
  double log10_upper = 3.0;
  int refine_iterations = 20;
};

struct ShapeSelection {
  double shape_c;
  double loocv;
};

/// Natural unit of c for the kernel: 1/median(d^2) for kernels in c*r^2,
/// median(d) for the inverse multiquadric.
double shape_scale(const Matrix& centers, KernelKind kind);

/// Returns the c minimizing loocv_error; throws ShapeSelectionError when
/// every candidate is ill-conditioned.
ShapeSelection select_shape(const Matrix& centers, const Vector& outputs, KernelKind kind,
                            const ShapeSearch& search = {});

}  // namespace ssrm

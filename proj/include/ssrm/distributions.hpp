#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssrm {

enum class DistributionKind { Normal, Uniform, GumbelMax };

std::string_view to_string(DistributionKind kind);
DistributionKind distribution_kind_from_string(std::string_view name);

/// Probabilities passed to the normal quantile are clamped to
/// [kCdfClamp, 1 - kCdfClamp] so tail values stay finite in U-space.
inline constexpr double kCdfClamp = 1e-15;

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// One independent input random variable.
///
/// p1/p2 are (mean, std) for Normal, (lower, upper) for Uniform and
/// (location, scale) for GumbelMax.
struct Marginal {
  DistributionKind kind = DistributionKind::Normal;
  double p1 = 0.0;
  double p2 = 1.0;

  static Marginal normal(double mean, double std);
  static Marginal uniform(double low, double high);
  static Marginal gumbel_max(double location, double scale);
  /// Gumbel (max) fitted to the given first two moments.
  static Marginal gumbel_max_from_moments(double mean, double std);

  double mean() const;
  double stddev() const;

  friend bool operator==(const Marginal&, const Marginal&) = default;
};

struct GumbelParams {
  double location;
  double scale;
};

/// Throws ParameterError if the parameters violate the kind's constraints.
void validate(const Marginal& m);

double cdf(const Marginal& m, double x);
double inv_cdf(const Marginal& m, double p);
double to_u(const Marginal& m, double x);
double from_u(const Marginal& m, double u);

GumbelParams gumbel_from_moments(double mean, double std);

/// Maps a U-space point through every marginal into X-space.
void from_u(std::span<const Marginal> marginals, std::span<const double> u, std::span<double> x);
std::vector<double> from_u(std::span<const Marginal> marginals, std::span<const double> u);
std::vector<double> to_u(std::span<const Marginal> marginals, std::span<const double> x);

}  // namespace ssrm

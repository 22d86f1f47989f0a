#include "ssrm/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ssrm/error.hpp"
#include "ssrm/normal.hpp"

namespace ssrm {

namespace {

double clamp_probability(double p) { return std::clamp(p, kCdfClamp, 1.0 - kCdfClamp); }

// Upper-tail probability 1 - F(x), computed without cancellation.
double survival(const Marginal& m, double x) {
  switch (m.kind) {
    case DistributionKind::Normal:
      return normal_cdf(-(x - m.p1) / m.p2);
    case DistributionKind::Uniform:
      return std::clamp((m.p2 - x) / (m.p2 - m.p1), 0.0, 1.0);
    case DistributionKind::GumbelMax:
      return -std::expm1(-std::exp(-(x - m.p1) / m.p2));
  }
  return 0.0;
}

// Inverse of survival() on (0, 1).
double inv_survival(const Marginal& m, double q) {
  switch (m.kind) {
    case DistributionKind::Normal:
      return m.p1 - m.p2 * normal_quantile(q);
    case DistributionKind::Uniform:
      return m.p2 - q * (m.p2 - m.p1);
    case DistributionKind::GumbelMax:
      return m.p1 - m.p2 * std::log(-std::log1p(-q));
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::Normal:
      return "normal";
    case DistributionKind::Uniform:
      return "uniform";
    case DistributionKind::GumbelMax:
      return "gumbel_max";
  }
  return "unknown";
}

DistributionKind distribution_kind_from_string(std::string_view name) {
  if (name == "normal") return DistributionKind::Normal;
  if (name == "uniform") return DistributionKind::Uniform;
  if (name == "gumbel_max") return DistributionKind::GumbelMax;
  throw ParameterError("unknown distribution kind '" + std::string(name) + "'");
}

Marginal Marginal::normal(double mean, double std) {
  Marginal m{DistributionKind::Normal, mean, std};
  validate(m);
  return m;
}

Marginal Marginal::uniform(double low, double high) {
  Marginal m{DistributionKind::Uniform, low, high};
  validate(m);
  return m;
}

Marginal Marginal::gumbel_max(double location, double scale) {
  Marginal m{DistributionKind::GumbelMax, location, scale};
  validate(m);
  return m;
}

Marginal Marginal::gumbel_max_from_moments(double mean, double std) {
  const auto g = gumbel_from_moments(mean, std);
  return gumbel_max(g.location, g.scale);
}

double Marginal::mean() const {
  switch (kind) {
    case DistributionKind::Normal:
      return p1;
    case DistributionKind::Uniform:
      return 0.5 * (p1 + p2);
    case DistributionKind::GumbelMax:
      return p1 + kEulerGamma * p2;
  }
  return 0.0;
}

double Marginal::stddev() const {
  switch (kind) {
    case DistributionKind::Normal:
      return p2;
    case DistributionKind::Uniform:
      return (p2 - p1) / std::sqrt(12.0);
    case DistributionKind::GumbelMax:
      return p2 * std::numbers::pi / std::sqrt(6.0);
  }
  return 0.0;
}

void validate(const Marginal& m) {
  if (!std::isfinite(m.p1) || !std::isfinite(m.p2)) {
    throw ParameterError("distribution parameters must be finite");
  }
  switch (m.kind) {
    case DistributionKind::Normal:
      if (!(m.p2 > 0.0)) throw ParameterError("normal: standard deviation must be positive");
      break;
    case DistributionKind::Uniform:
      if (!(m.p2 > m.p1)) throw ParameterError("uniform: upper bound must exceed lower bound");
      break;
    case DistributionKind::GumbelMax:
      if (!(m.p2 > 0.0)) throw ParameterError("gumbel_max: scale must be positive");
      break;
  }
}

double cdf(const Marginal& m, double x) {
  validate(m);
  if (std::isnan(x)) throw DomainError("cdf: argument is NaN");
  switch (m.kind) {
    case DistributionKind::Normal:
      return normal_cdf((x - m.p1) / m.p2);
    case DistributionKind::Uniform:
      return std::clamp((x - m.p1) / (m.p2 - m.p1), 0.0, 1.0);
    case DistributionKind::GumbelMax:
      return std::exp(-std::exp(-(x - m.p1) / m.p2));
  }
  return 0.0;
}

double inv_cdf(const Marginal& m, double p) {
  validate(m);
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("inv_cdf requires p in (0, 1), got " + std::to_string(p));
  }
  switch (m.kind) {
    case DistributionKind::Normal:
      return m.p1 + m.p2 * normal_quantile(p);
    case DistributionKind::Uniform:
      return m.p1 + p * (m.p2 - m.p1);
    case DistributionKind::GumbelMax:
      return m.p1 - m.p2 * std::log(-std::log(p));
  }
  return 0.0;
}

double to_u(const Marginal& m, double x) {
  validate(m);
  if (m.kind == DistributionKind::Normal) return (x - m.p1) / m.p2;
  const double p = cdf(m, x);
  if (p <= 0.5) return normal_quantile(clamp_probability(p));
  return -normal_quantile(clamp_probability(survival(m, x)));
}

double from_u(const Marginal& m, double u) {
  validate(m);
  if (m.kind == DistributionKind::Normal) return m.p1 + m.p2 * u;
  if (u <= 0.0) return inv_cdf(m, clamp_probability(normal_cdf(u)));
  return inv_survival(m, clamp_probability(normal_cdf(-u)));
}

GumbelParams gumbel_from_moments(double mean, double std) {
  if (!(std > 0.0) || !std::isfinite(mean) || !std::isfinite(std)) {
    throw ParameterError("gumbel_from_moments: standard deviation must be positive");
  }
  const double scale = std * std::sqrt(6.0) / std::numbers::pi;
  return {mean - kEulerGamma * scale, scale};
}

void from_u(std::span<const Marginal> marginals, std::span<const double> u, std::span<double> x) {
  if (u.size() != marginals.size() || x.size() != marginals.size()) {
    throw ShapeError("from_u: dimension mismatch");
  }
  for (std::size_t i = 0; i < marginals.size(); ++i) x[i] = from_u(marginals[i], u[i]);
}

std::vector<double> from_u(std::span<const Marginal> marginals, std::span<const double> u) {
  std::vector<double> x(marginals.size());
  from_u(marginals, u, x);
  return x;
}

std::vector<double> to_u(std::span<const Marginal> marginals, std::span<const double> x) {
  if (x.size() != marginals.size()) throw ShapeError("to_u: dimension mismatch");
  std::vector<double> u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) u[i] = to_u(marginals[i], x[i]);
  return u;
}

}  // namespace ssrm

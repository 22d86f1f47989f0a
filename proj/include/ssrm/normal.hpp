#pragma once

namespace ssrm {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile; `p` must lie in (0, 1).
double normal_quantile(double p);

/// Standard normal density.
double normal_pdf(double x);

}  // namespace ssrm

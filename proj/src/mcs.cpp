#include "ssrm/mcs.hpp"

#include <cmath>
#include <exception>
#include <span>
#include <vector>

#include "ssrm/error.hpp"
#include "ssrm/parallel.hpp"
#include "ssrm/random.hpp"

namespace ssrm {

namespace {

constexpr std::size_t kChunk = 16384;

void fill_normal_rows(const CounterRng& rng, std::uint64_t first_row, Eigen::Index m,
                      Eigen::Ref<Matrix> block) {
  const auto mm = static_cast<std::uint64_t>(m);
  for (Eigen::Index r = 0; r < block.rows(); ++r) {
    const std::uint64_t base = (first_row + static_cast<std::uint64_t>(r)) * mm;
    for (Eigen::Index j = 0; j < m; ++j) {
      block(r, j) = normal_at(rng, base + static_cast<std::uint64_t>(j));
    }
  }
}

std::uint64_t sum(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace

PfEstimate make_estimate(std::uint64_t n_failures, std::uint64_t n_samples, std::uint64_t seed) {
  PfEstimate e;
  e.n_samples = n_samples;
  e.n_failures = n_failures;
  e.seed = seed;
  e.pf = n_samples > 0 ? static_cast<double>(n_failures) / static_cast<double>(n_samples) : 0.0;
  if (n_failures > 0) {
    e.cov = std::sqrt((1.0 - e.pf) / (e.pf * static_cast<double>(n_samples)));
  }
  return e;
}

double binomial_standard_error(double p, std::uint64_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

Matrix standard_normal_sample(std::uint64_t n, Eigen::Index m, std::uint64_t seed, int threads) {
  if (m < 1) throw ParameterError("sample dimension must be positive");
  Matrix samples(static_cast<Eigen::Index>(n), m);
  const CounterRng rng(seed);
  parallel_chunks(n, kChunk, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    fill_normal_rows(rng, begin, m,
                     samples.middleRows(static_cast<Eigen::Index>(begin),
                                        static_cast<Eigen::Index>(end - begin)));
  });
  return samples;
}

PfEstimate estimate_pf(const RbfSurrogate& surrogate, const Matrix& samples, std::uint64_t seed,
                       int threads) {
  if (samples.cols() != surrogate.dimension()) {
    throw ShapeError("estimate_pf: sample dimension does not match the surrogate");
  }
  const auto n = static_cast<std::size_t>(samples.rows());
  std::vector<std::uint64_t> failures(chunk_count(n, kChunk), 0);
  parallel_chunks(n, kChunk, threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    std::vector<double> values(end - begin);
    const Matrix block = samples.middleRows(static_cast<Eigen::Index>(begin),
                                            static_cast<Eigen::Index>(end - begin));
    surrogate.predict_batch(block, values);
    std::uint64_t count = 0;
    for (double v : values) count += v <= 0.0 ? 1 : 0;
    failures[c] = count;
  });
  return make_estimate(sum(failures), n, seed);
}

PfEstimate estimate_pf_surrogate(const RbfSurrogate& surrogate, std::uint64_t n, Eigen::Index m,
                                 std::uint64_t seed, int threads) {
  if (n < 1) throw ParameterError("MCS sample size must be positive");
  if (m != surrogate.dimension()) throw ShapeError("estimate_pf_surrogate: dimension mismatch");
  const CounterRng rng(seed);
  std::vector<std::uint64_t> failures(chunk_count(n, kChunk), 0);
  parallel_chunks(n, kChunk, threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    Matrix block(static_cast<Eigen::Index>(end - begin), m);
    fill_normal_rows(rng, begin, m, block);
    std::vector<double> values(end - begin);
    surrogate.predict_batch(block, values);
    std::uint64_t count = 0;
    for (double v : values) count += v <= 0.0 ? 1 : 0;
    failures[c] = count;
  });
  return make_estimate(sum(failures), n, seed);
}

PfEstimate estimate_pf_surrogate(const ScalarField& field, std::uint64_t n, Eigen::Index m,
                                 std::uint64_t seed, int threads) {
  if (n < 1) throw ParameterError("MCS sample size must be positive");
  if (m < 1) throw ParameterError("sample dimension must be positive");
  const CounterRng rng(seed);
  std::vector<std::uint64_t> failures(chunk_count(n, kChunk), 0);
  parallel_chunks(n, kChunk, threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    Matrix block(static_cast<Eigen::Index>(end - begin), m);
    fill_normal_rows(rng, begin, m, block);
    std::uint64_t count = 0;
    for (Eigen::Index r = 0; r < block.rows(); ++r) {
      const std::span<const double> u(block.row(r).data(), static_cast<std::size_t>(m));
      count += field(u) <= 0.0 ? 1 : 0;
    }
    failures[c] = count;
  });
  return make_estimate(sum(failures), n, seed);
}

PfEstimate estimate_pf_direct(const ProblemDefinition& problem, std::uint64_t n, std::uint64_t seed,
                              int threads) {
  validate(problem);
  if (n < 1) throw ParameterError("MCS sample size must be positive");
  const auto m = static_cast<Eigen::Index>(problem.dimension());
  const CounterRng rng(seed);
  std::vector<std::uint64_t> failures(chunk_count(n, kChunk), 0);
  parallel_chunks(n, kChunk, threads, [&](std::size_t begin, std::size_t end, std::size_t c) {
    Matrix block(static_cast<Eigen::Index>(end - begin), m);
    fill_normal_rows(rng, begin, m, block);
    std::vector<double> x(static_cast<std::size_t>(m));
    std::uint64_t count = 0;
    for (Eigen::Index r = 0; r < block.rows(); ++r) {
      const std::size_t index = begin + static_cast<std::size_t>(r);
      double g = 0.0;
      try {
        from_u(problem.marginals, std::span<const double>(block.row(r).data(), x.size()), x);
        g = problem.lsf(x);
      } catch (const std::exception& e) {
        throw LsfEvaluationError(index, e.what());
      }
      if (std::isnan(g)) throw LsfEvaluationError(index, "limit state returned NaN");
      count += g <= 0.0 ? 1 : 0;
    }
    failures[c] = count;
  });
  return make_estimate(sum(failures), n, seed);
}

}  // namespace ssrm

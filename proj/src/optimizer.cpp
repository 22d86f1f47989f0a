#include "ssrm/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssrm/error.hpp"
#include "ssrm/random.hpp"

namespace ssrm {

namespace {

struct Individual {
  std::vector<double> genes;
  double fitness = std::numeric_limits<double>::infinity();
};

void clip(std::vector<double>& genes, const BoxBounds& bounds) {
  for (std::size_t j = 0; j < genes.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    genes[j] = std::clamp(genes[j], bounds.lower[jj], bounds.upper[jj]);
  }
}

double norm(std::span<const double> u) {
  double s = 0.0;
  for (double v : u) s += v * v;
  return std::sqrt(s);
}

}  // namespace

ScalarField as_field(const RbfSurrogate& surrogate) {
  return [&surrogate](std::span<const double> u) { return surrogate.predict(u); };
}

void validate(const GaConfig& cfg) {
  if (cfg.population < 4 || cfg.population % 2 != 0) {
    throw ParameterError("GA population must be even and at least 4");
  }
  if (cfg.generations < 1) throw ParameterError("GA needs at least one generation");
  auto is_rate = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!is_rate(cfg.crossover_rate) || !is_rate(cfg.mutation_rate)) {
    throw ParameterError("GA rates must lie in [0, 1]");
  }
  if (!(cfg.mutation_scale > 0.0) || !(cfg.equality_tolerance > 0.0) || !(cfg.blend_alpha >= 0.0) ||
      !(cfg.penalty_weight_eq >= 0.0) || !(cfg.penalty_weight_dist >= 0.0)) {
    throw ParameterError("GA scales, tolerances and penalty weights must be positive");
  }
}

double min_distance(std::span<const double> u, const Matrix& existing) {
  const Eigen::Map<const Eigen::RowVectorXd> p(u.data(), static_cast<Eigen::Index>(u.size()));
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < existing.rows(); ++i) {
    best = std::min(best, (existing.row(i) - p).squaredNorm());
  }
  return std::sqrt(best);
}

double fitness(std::span<const double> u, const ScalarField& surrogate, const Matrix& existing,
               double d_min, const GaConfig& cfg) {
  const double g = surrogate(u);
  const double gap = std::max(0.0, d_min - min_distance(u, existing));
  return norm(u) + cfg.penalty_weight_eq * std::abs(g) + cfg.penalty_weight_dist * gap;
}

CandidatePoint evaluate_candidate(std::span<const double> u, const ScalarField& surrogate,
                                  const Matrix& existing, double d_min, const BoxBounds& bounds,
                                  const GaConfig& cfg) {
  CandidatePoint c;
  c.u.assign(u.begin(), u.end());
  c.norm = norm(u);
  c.surrogate_value = surrogate(u);
  c.min_dist = min_distance(u, existing);
  const Eigen::Map<const Eigen::RowVectorXd> p(u.data(), static_cast<Eigen::Index>(u.size()));
  c.feasible = std::abs(c.surrogate_value) <= cfg.equality_tolerance && c.min_dist >= d_min &&
               bounds.contains(p);
  return c;
}

GaOutcome run_ga(const ScalarField& surrogate, const Matrix& existing, double d_min,
                 const BoxBounds& bounds, const GaConfig& cfg) {
  validate(cfg);
  validate(bounds);
  if (existing.rows() > 0 && existing.cols() != bounds.dimension()) {
    throw ShapeError("run_ga: existing samples and bounds differ in dimension");
  }
  const auto m = static_cast<std::size_t>(bounds.dimension());
  const auto pop_size = static_cast<std::size_t>(cfg.population);
  CounterRng rng(cfg.seed);

  auto evaluate = [&](Individual& ind) {
    ind.fitness = fitness(ind.genes, surrogate, existing, d_min, cfg);
  };

  std::vector<Individual> population(pop_size);
  for (auto& ind : population) {
    ind.genes.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      ind.genes[j] = bounds.lower[jj] + rng.next_uniform() * (bounds.upper[jj] - bounds.lower[jj]);
    }
    evaluate(ind);
  }

  auto best_of = [](const std::vector<Individual>& pop) {
    return std::min_element(pop.begin(), pop.end(), [](const Individual& a, const Individual& b) {
      return a.fitness < b.fitness;
    });
  };

  GaOutcome outcome;
  Individual best = *best_of(population);
  outcome.generation_best.push_back(best.fitness);

  auto tournament = [&]() -> const Individual& {
    const auto& a = population[rng.next_below(pop_size)];
    const auto& b = population[rng.next_below(pop_size)];
    return a.fitness <= b.fitness ? a : b;
  };

  std::vector<Individual> next;
  next.reserve(pop_size + 1);
  for (int gen = 0; gen < cfg.generations; ++gen) {
    next.clear();
    next.push_back(*best_of(population));
    while (next.size() < pop_size) {
      Individual c1 = tournament();
      Individual c2 = tournament();
      if (rng.next_uniform() < cfg.crossover_rate) {
        for (std::size_t j = 0; j < m; ++j) {
          const double lo = std::min(c1.genes[j], c2.genes[j]);
          const double hi = std::max(c1.genes[j], c2.genes[j]);
          const double ext = cfg.blend_alpha * (hi - lo);
          c1.genes[j] = lo - ext + rng.next_uniform() * (hi - lo + 2.0 * ext);
          c2.genes[j] = lo - ext + rng.next_uniform() * (hi - lo + 2.0 * ext);
        }
      }
      for (Individual* child : {&c1, &c2}) {
        for (std::size_t j = 0; j < m; ++j) {
          if (rng.next_uniform() < cfg.mutation_rate) {
            const auto jj = static_cast<Eigen::Index>(j);
            const double width = bounds.upper[jj] - bounds.lower[jj];
            child->genes[j] += cfg.mutation_scale * width * rng.next_normal();
          }
        }
        clip(child->genes, bounds);
        evaluate(*child);
        if (next.size() < pop_size) next.push_back(std::move(*child));
      }
    }
    population.swap(next);
    const auto& gen_best = *best_of(population);
    if (gen_best.fitness < best.fitness) best = gen_best;
    outcome.generation_best.push_back(gen_best.fitness);
  }

  outcome.best = evaluate_candidate(best.genes, surrogate, existing, d_min, bounds, cfg);
  outcome.best_fitness = best.fitness;
  return outcome;
}

CandidatePoint propose_point(const ScalarField& surrogate, const Matrix& existing, double d_min,
                             const BoxBounds& bounds, const GaConfig& cfg) {
  return run_ga(surrogate, existing, d_min, bounds, cfg).best;
}

CandidatePoint propose_point(const RbfSurrogate& surrogate, const Matrix& existing, double d_min,
                             const BoxBounds& bounds, const GaConfig& cfg) {
  if (surrogate.dimension() != bounds.dimension()) {
    throw ShapeError("propose_point: surrogate and bounds differ in dimension");
  }
  return propose_point(as_field(surrogate), existing, d_min, bounds, cfg);
}

}  // namespace ssrm

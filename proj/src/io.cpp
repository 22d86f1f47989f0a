#include "ssrm/io.hpp"

#include <charconv>
#include <fstream>
#include <memory>
#include <set>

#include "ssrm/error.hpp"
#include "ssrm/expression.hpp"

namespace ssrm::io {

namespace {

template <typename T>
void read_if(const json& j, const char* key, T& target) {
  if (const auto it = j.find(key); it != j.end()) target = it->get<T>();
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ParameterError("unknown " + what + " key '" + key + "'");
  }
}

json ga_to_json(const GaConfig& ga) {
  return {{"population", ga.population},
          {"generations", ga.generations},
          {"crossover_rate", ga.crossover_rate},
          {"blend_alpha", ga.blend_alpha},
          {"mutation_rate", ga.mutation_rate},
          {"mutation_scale", ga.mutation_scale},
          {"equality_tolerance", ga.equality_tolerance},
          {"penalty_weight_eq", ga.penalty_weight_eq},
          {"penalty_weight_dist", ga.penalty_weight_dist},
          {"seed", ga.seed}};
}

GaConfig ga_from_json(const json& j, GaConfig ga) {
  reject_unknown(j,
                 {"population", "generations", "crossover_rate", "blend_alpha", "mutation_rate",
                  "mutation_scale", "equality_tolerance", "penalty_weight_eq",
                  "penalty_weight_dist", "seed"},
                 "ga");
  read_if(j, "population", ga.population);
  read_if(j, "generations", ga.generations);
  read_if(j, "crossover_rate", ga.crossover_rate);
  read_if(j, "blend_alpha", ga.blend_alpha);
  read_if(j, "mutation_rate", ga.mutation_rate);
  read_if(j, "mutation_scale", ga.mutation_scale);
  read_if(j, "equality_tolerance", ga.equality_tolerance);
  read_if(j, "penalty_weight_eq", ga.penalty_weight_eq);
  read_if(j, "penalty_weight_dist", ga.penalty_weight_dist);
  read_if(j, "seed", ga.seed);
  return ga;
}

json vector_to_json(std::span<const double> v) { return json(std::vector<double>(v.begin(), v.end())); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

json to_json(const SsrmConfig& cfg) {
  return {{"d_min", cfg.d_min},
          {"eps_a", cfg.eps_a},
          {"eps_r", cfg.eps_r},
          {"consecutive_passes", cfg.consecutive_passes},
          {"k_max", cfg.k_max},
          {"n_mcs", cfg.n_mcs},
          {"mcs_seed", cfg.mcs_seed},
          {"lhs_seed", cfg.lhs_seed},
          {"initial_size_rule", std::string(to_string(cfg.initial_size_rule))},
          {"bound_lower", cfg.bound_lower},
          {"bound_upper", cfg.bound_upper},
          {"kernel", std::string(to_string(cfg.kernel))},
          {"shape_search",
           {{"grid_points", cfg.shape_search.grid_points},
            {"log10_lower", cfg.shape_search.log10_lower},
            {"log10_upper", cfg.shape_search.log10_upper},
            {"refine_iterations", cfg.shape_search.refine_iterations}}},
          {"ga", ga_to_json(cfg.ga)}};
}

SsrmConfig config_from_json(const json& j, SsrmConfig cfg) {
  if (!j.is_object()) throw ParameterError("configuration must be a JSON object");
  reject_unknown(j,
                 {"d_min", "eps_a", "eps_r", "consecutive_passes", "k_max", "n_mcs", "mcs_seed",
                  "lhs_seed", "initial_size_rule", "bound_lower", "bound_upper", "kernel",
                  "shape_search", "ga"},
                 "configuration");
  try {
    read_if(j, "d_min", cfg.d_min);
    read_if(j, "eps_a", cfg.eps_a);
    read_if(j, "eps_r", cfg.eps_r);
    read_if(j, "consecutive_passes", cfg.consecutive_passes);
    read_if(j, "k_max", cfg.k_max);
    read_if(j, "n_mcs", cfg.n_mcs);
    read_if(j, "mcs_seed", cfg.mcs_seed);
    read_if(j, "lhs_seed", cfg.lhs_seed);
    read_if(j, "bound_lower", cfg.bound_lower);
    read_if(j, "bound_upper", cfg.bound_upper);
    if (const auto it = j.find("initial_size_rule"); it != j.end()) {
      cfg.initial_size_rule = initial_size_rule_from_string(it->get<std::string>());
    }
    if (const auto it = j.find("kernel"); it != j.end()) {
      cfg.kernel = kernel_kind_from_string(it->get<std::string>());
    }
    if (const auto it = j.find("shape_search"); it != j.end()) {
      reject_unknown(*it, {"grid_points", "log10_lower", "log10_upper", "refine_iterations"},
                     "shape_search");
      read_if(*it, "grid_points", cfg.shape_search.grid_points);
      read_if(*it, "log10_lower", cfg.shape_search.log10_lower);
      read_if(*it, "log10_upper", cfg.shape_search.log10_upper);
      read_if(*it, "refine_iterations", cfg.shape_search.refine_iterations);
    }
    if (const auto it = j.find("ga"); it != j.end()) cfg.ga = ga_from_json(*it, cfg.ga);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("invalid configuration value: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

json to_json(const PfEstimate& e) {
  return {{"pf", e.pf},
          {"n_samples", e.n_samples},
          {"n_failures", e.n_failures},
          {"cov", e.cov ? json(*e.cov) : json(nullptr)},
          {"seed", e.seed}};
}

json to_json(const PhaseTimings& t) {
  return {{"initial_design_s", t.initial_design_s},
          {"fit_s", t.fit_s},
          {"propose_s", t.propose_s},
          {"lsf_s", t.lsf_s},
          {"mcs_s", t.mcs_s}};
}

json to_json(const SsrmRunResult& r) {
  json samples = json::array();
  for (Eigen::Index i = 0; i < r.samples.size(); ++i) {
    samples.push_back({{"u", vector_to_json({r.samples.u().row(i).data(),
                                             static_cast<std::size_t>(r.samples.dimension())})},
                       {"g", r.samples.g()[i]},
                       {"iteration", r.samples.iteration()[static_cast<std::size_t>(i)]}});
  }
  json iterations = json::array();
  for (const auto& it : r.per_iteration) {
    iterations.push_back({{"iteration", it.iteration},
                          {"added_u", it.added_u},
                          {"added_g", it.added_g},
                          {"feasible", it.feasible},
                          {"perturbed", it.perturbed},
                          {"candidate_surrogate_value", it.candidate_surrogate_value},
                          {"candidate_min_dist", it.candidate_min_dist},
                          {"shape_c", it.shape_c},
                          {"loocv", it.loocv},
                          {"pf", it.pf}});
  }
  return {{"final_pf", r.final_pf},
          {"pf_history", r.pf_history},
          {"n_lsf_evals", r.n_lsf_evals},
          {"iterations", r.iterations},
          {"converged_by", std::string(to_string(r.converged_by))},
          {"initial_shape_c", r.initial_shape_c},
          {"initial_loocv", r.initial_loocv},
          {"per_iteration", iterations},
          {"samples", samples}};
}

json marginal_to_json(const Marginal& m) {
  json j{{"kind", std::string(to_string(m.kind))}};
  switch (m.kind) {
    case DistributionKind::Normal:
    case DistributionKind::GumbelMax:
      j["mean"] = m.mean();
      j["std"] = m.stddev();
      break;
    case DistributionKind::Uniform:
      j["low"] = m.p1;
      j["high"] = m.p2;
      break;
  }
  return j;
}

Marginal marginal_from_json(const json& j) {
  try {
    const auto kind = distribution_kind_from_string(j.at("kind").get<std::string>());
    switch (kind) {
      case DistributionKind::Normal:
        return Marginal::normal(j.at("mean").get<double>(), j.at("std").get<double>());
      case DistributionKind::GumbelMax:
        return Marginal::gumbel_max_from_moments(j.at("mean").get<double>(),
                                                 j.at("std").get<double>());
      case DistributionKind::Uniform:
        return Marginal::uniform(j.at("low").get<double>(), j.at("high").get<double>());
    }
  } catch (const json::exception& e) {
    throw ParameterError(std::string("invalid variable definition: ") + e.what());
  }
  throw ParameterError("invalid variable definition");
}

ProblemDefinition problem_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("problem definition must be a JSON object");
  reject_unknown(j,
                 {"name", "description", "variables", "lsf_expression", "constants",
                  "ssrm_overrides", "large_std", "reference_pf", "reference_n"},
                 "problem");
  ProblemDefinition p;
  try {
    p.name = j.at("name").get<std::string>();
    read_if(j, "description", p.description);
    for (const auto& v : j.at("variables")) {
      p.variable_names.push_back(v.at("name").get<std::string>());
      json dist = v;
      dist.erase("name");
      p.marginals.push_back(marginal_from_json(dist));
    }
    if (const auto it = j.find("constants"); it != j.end()) {
      p.constants = it->get<std::map<std::string, double>>();
    }
    read_if(j, "large_std", p.large_std);
    if (const auto it = j.find("reference_pf"); it != j.end()) {
      p.reference = ReferenceResult{it->get<double>(), j.value("reference_n", std::uint64_t{0})};
    }
    if (const auto it = j.find("ssrm_overrides"); it != j.end()) {
      reject_unknown(*it, {"d_min", "eps_a", "eps_r", "k_max", "n_mcs"}, "ssrm_overrides");
      const auto& o = *it;
      if (o.contains("d_min")) p.overrides.d_min = o["d_min"].get<double>();
      if (o.contains("eps_a")) p.overrides.eps_a = o["eps_a"].get<double>();
      if (o.contains("eps_r")) p.overrides.eps_r = o["eps_r"].get<double>();
      if (o.contains("k_max")) p.overrides.k_max = o["k_max"].get<int>();
      if (o.contains("n_mcs")) p.overrides.n_mcs = o["n_mcs"].get<std::uint64_t>();
    }
    const auto text = j.at("lsf_expression").get<std::string>();
    auto expr = std::make_shared<const Expression>(
        Expression::parse(text, p.variable_names, p.constants));
    p.lsf = [expr](std::span<const double> x) { return expr->evaluate(x); };
  } catch (const json::exception& e) {
    throw ParameterError(std::string("invalid problem definition: ") + e.what());
  }
  validate(p);
  return p;
}

ProblemDefinition load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open problem file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParameterError("problem file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return problem_from_json(j);
}

json problem_summary(const ProblemDefinition& p) {
  json vars = json::array();
  for (std::size_t i = 0; i < p.marginals.size(); ++i) {
    json v = marginal_to_json(p.marginals[i]);
    v["name"] = i < p.variable_names.size() ? p.variable_names[i] : "x" + std::to_string(i + 1);
    vars.push_back(v);
  }
  return {{"name", p.name},
          {"description", p.description},
          {"dimension", p.dimension()},
          {"variables", vars},
          {"reference_pf", p.reference ? json(p.reference->pf) : json(nullptr)},
          {"reference_n", p.reference ? json(p.reference->n_samples) : json(nullptr)}};
}

json to_json(const RunRecord& record) {
  json j{{"version", kVersion},
         {"problem", record.problem},
         {"config", to_json(record.config)},
         {"result", to_json(record.result)},
         {"oracle", record.oracle ? to_json(*record.oracle) : json(nullptr)}};
  json timings = to_json(record.result.timings);
  if (record.oracle) timings["oracle_s"] = record.oracle_seconds;
  j["timings"] = timings;
  return j;
}

void write_trace_csv(std::ostream& out, const SsrmRunResult& result) {
  const auto m = result.samples.dimension();
  out << "iteration";
  for (Eigen::Index j = 0; j < m; ++j) out << ",u_" << (j + 1);
  out << ",g,feasible,shape_c,pf\n";

  const auto& samples = result.samples;
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    const int it = samples.iteration()[static_cast<std::size_t>(i)];
    out << it;
    for (Eigen::Index j = 0; j < m; ++j) out << ',' << format_double(samples.u()(i, j));
    out << ',' << format_double(samples.g()[i]) << ',';
    if (it == 0) {
      out << ',' << format_double(result.initial_shape_c) << ','
          << format_double(result.pf_history.front());
    } else {
      const auto& rec = result.per_iteration[static_cast<std::size_t>(it - 1)];
      out << (rec.feasible ? 1 : 0) << ',' << format_double(rec.shape_c) << ','
          << format_double(rec.pf);
    }
    out << '\n';
  }
}

}  // namespace ssrm::io

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ssrm/engine.hpp"
#include "ssrm/mcs.hpp"
#include "ssrm/problem.hpp"

namespace ssrm::io {

using nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

json to_json(const SsrmConfig& cfg);
/// Applies every key present in `j` on top of `base`; unknown keys are rejected.
SsrmConfig config_from_json(const json& j, SsrmConfig base = {});

json to_json(const PfEstimate& e);
json to_json(const SsrmRunResult& r);
json to_json(const PhaseTimings& t);

json marginal_to_json(const Marginal& m);
/// {"kind": "normal"|"gumbel_max", "mean", "std"} or {"kind": "uniform", "low", "high"}.
Marginal marginal_from_json(const json& j);

/// User problem: {name, variables: [{name, kind, ...}], lsf_expression,
/// constants?, ssrm_overrides?, large_std?, reference_pf?}.
ProblemDefinition problem_from_json(const json& j);
ProblemDefinition load_problem_file(const std::filesystem::path& path);

/// Problem summary as listed by the CLI.
json problem_summary(const ProblemDefinition& p);

struct RunRecord {
  std::string problem;
  SsrmConfig config;
  SsrmRunResult result;
  std::optional<PfEstimate> oracle;
  double oracle_seconds = 0.0;
};

/// Reproducible part under "problem", "config", "result", "oracle", "version";
/// wall-clock data only under "timings".
json to_json(const RunRecord& record);

/// Per-iteration trace: iteration, u_1..u_m, g, feasible, shape_c, pf. One row per
/// sample; initial-design rows carry iteration 0, an empty feasible field and P_0.
void write_trace_csv(std::ostream& out, const SsrmRunResult& result);

}  // namespace ssrm::io

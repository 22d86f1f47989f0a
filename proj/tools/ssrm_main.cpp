// Command-line front end: `ssrm run|oracle|list`.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ssrm/benchmarks.hpp"
#include "ssrm/engine.hpp"
#include "ssrm/error.hpp"
#include "ssrm/io.hpp"
#include "ssrm/mcs.hpp"

namespace {

using ssrm::io::json;
namespace fs = std::filesystem;

constexpr int kExitConverged = 0;
constexpr int kExitError = 1;
constexpr int kExitKMax = 2;

ssrm::ProblemDefinition resolve_problem(const std::string& spec, bool tube_as_printed) {
  if (spec.ends_with(".json") || fs::is_regular_file(spec)) return ssrm::io::load_problem_file(spec);
  if (spec == "tube" && tube_as_printed) {
    return ssrm::benchmarks::tube(ssrm::benchmarks::TubeAxialAngle::Theta1AsPrinted);
  }
  return ssrm::benchmarks::get_problem(spec);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ssrm::LookupError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ssrm::ParameterError("'" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ssrm::Error("cannot write '" + path + "'");
  out << contents;
}

struct RunOptions {
  std::string problem;
  std::string out;
  std::string trace;
  std::string config_file;
  std::optional<std::uint64_t> seed_lhs, seed_mcs, seed_ga, n_mcs;
  std::optional<double> d_min, eps_a, eps_r;
  std::optional<int> k_max, consecutive;
  std::optional<std::string> kernel;
  std::uint64_t oracle_n = 0;
  std::uint64_t oracle_seed = 2;
  int threads = 1;
  bool tube_as_printed = false;
  bool quiet = false;
};

int cmd_run(const RunOptions& opt) {
  const auto problem = resolve_problem(opt.problem, opt.tube_as_printed);
  ssrm::SsrmConfig cfg = ssrm::default_config(problem);
  if (!opt.config_file.empty()) {
    const json j = read_json(opt.config_file);
    // Accept either a bare configuration or a full run record.
    cfg = ssrm::io::config_from_json(j.contains("config") ? j.at("config") : j, cfg);
  }
  if (opt.seed_lhs) cfg.lhs_seed = *opt.seed_lhs;
  if (opt.seed_mcs) cfg.mcs_seed = *opt.seed_mcs;
  if (opt.seed_ga) cfg.ga.seed = *opt.seed_ga;
  if (opt.n_mcs) cfg.n_mcs = *opt.n_mcs;
  if (opt.d_min) cfg.d_min = *opt.d_min;
  if (opt.eps_a) cfg.eps_a = *opt.eps_a;
  if (opt.eps_r) cfg.eps_r = *opt.eps_r;
  if (opt.k_max) cfg.k_max = *opt.k_max;
  if (opt.consecutive) cfg.consecutive_passes = *opt.consecutive;
  if (opt.kernel) cfg.kernel = ssrm::kernel_kind_from_string(*opt.kernel);
  cfg.threads = opt.threads;
  ssrm::validate(cfg);

  ssrm::io::RunRecord record;
  record.problem = problem.name;
  record.config = cfg;
  record.result = ssrm::run_ssrm(problem, cfg);
  if (opt.oracle_n > 0) {
    const auto start = std::chrono::steady_clock::now();
    record.oracle = ssrm::estimate_pf_direct(problem, opt.oracle_n, opt.oracle_seed, opt.threads);
    record.oracle_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  const std::string out = opt.out.empty() ? "ssrm_" + problem.name + ".json" : opt.out;
  const std::string trace = opt.trace.empty() ? "ssrm_" + problem.name + "_trace.csv" : opt.trace;
  write_file(out, ssrm::io::to_json(record).dump(2) + "\n");
  std::ostringstream csv;
  ssrm::io::write_trace_csv(csv, record.result);
  write_file(trace, csv.str());

  const auto& r = record.result;
  if (!opt.quiet) {
    std::cout << "problem      " << problem.name << "\n"
              << "final_pf     " << ssrm::io::format_double(r.final_pf) << "\n"
              << "lsf_evals    " << r.n_lsf_evals << " (" << (r.n_lsf_evals - r.iterations)
              << " initial + " << r.iterations << " added)\n"
              << "stopped_by   " << ssrm::to_string(r.converged_by) << "\n";
    if (record.oracle) {
      std::cout << "oracle_pf    " << ssrm::io::format_double(record.oracle->pf) << " (n="
                << record.oracle->n_samples << ")\n";
    }
    std::cout << "result       " << out << "\n"
              << "trace        " << trace << "\n";
  }
  return r.converged_by == ssrm::StopReason::Converged ? kExitConverged : kExitKMax;
}

int cmd_oracle(const std::string& problem_spec, std::uint64_t n, std::uint64_t seed, int threads,
               bool tube_as_printed, const std::string& json_out) {
  const auto problem = resolve_problem(problem_spec, tube_as_printed);
  const auto est = ssrm::estimate_pf_direct(problem, n, seed, threads);
  json j = ssrm::io::to_json(est);
  j["problem"] = problem.name;
  std::cout << "problem " << problem.name << "\n"
            << "pf      " << ssrm::io::format_double(est.pf) << "\n"
            << "cov     " << (est.cov ? ssrm::io::format_double(*est.cov) : "n/a") << "\n"
            << "n       " << est.n_samples << "\n"
            << "seed    " << est.seed << "\n";
  if (!json_out.empty()) write_file(json_out, j.dump(2) + "\n");
  return 0;
}

int cmd_list(bool machine) {
  json rows = json::array();
  for (const auto& name : ssrm::benchmarks::problem_names()) {
    rows.push_back(ssrm::io::problem_summary(ssrm::benchmarks::get_problem(name)));
  }
  if (machine) {
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  std::cout << std::left << std::setw(12) << "name" << std::setw(5) << "dim" << std::setw(14)
            << "reference_pf" << "distributions\n";
  for (const auto& row : rows) {
    std::string kinds;
    for (const auto& v : row["variables"]) {
      if (!kinds.empty()) kinds += ",";
      kinds += v["kind"].get<std::string>();
    }
    std::cout << std::left << std::setw(12) << row["name"].get<std::string>() << std::setw(5)
              << row["dimension"].get<std::size_t>() << std::setw(14)
              << ssrm::io::format_double(row["reference_pf"].get<double>()) << kinds << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential RBF surrogate reliability analysis"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "run the sequential surrogate method on a problem");
  run_cmd->add_option("problem", run.problem, "built-in problem name or JSON problem file")->required();
  run_cmd->add_option("-o,--out", run.out, "result JSON path (default ssrm_<name>.json)");
  run_cmd->add_option("--trace", run.trace, "trace CSV path (default ssrm_<name>_trace.csv)");
  run_cmd->add_option("--config", run.config_file, "configuration JSON or previous run record");
  run_cmd->add_option("--seed-lhs", run.seed_lhs, "initial design seed (default 1)");
  run_cmd->add_option("--seed-mcs", run.seed_mcs, "Monte Carlo seed (default 2)");
  run_cmd->add_option("--seed-ga", run.seed_ga, "genetic algorithm base seed (default 3)");
  run_cmd->add_option("--n-mcs", run.n_mcs, "Monte Carlo sample size on the surrogate");
  run_cmd->add_option("--d-min", run.d_min, "minimum distance between samples in U-space");
  run_cmd->add_option("--eps-a", run.eps_a, "absolute convergence tolerance");
  run_cmd->add_option("--eps-r", run.eps_r, "relative convergence tolerance");
  run_cmd->add_option("--k-max", run.k_max, "maximum number of added points");
  run_cmd->add_option("--consecutive", run.consecutive, "consecutive passes required to stop");
  run_cmd->add_option("--kernel", run.kernel, "gaussian | inverse_multiquadric | thin_plate_spline");
  run_cmd->add_option("--oracle-n", run.oracle_n, "also run direct MCS with this many samples");
  run_cmd->add_option("--oracle-seed", run.oracle_seed, "seed of the direct MCS (default 2)");
  run_cmd->add_option("--threads", run.threads, "worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--tube-as-printed", run.tube_as_printed, "tube: F2 axial term uses theta1");
  run_cmd->add_flag("-q,--quiet", run.quiet, "suppress the summary");

  std::string oracle_problem;
  std::string oracle_json;
  std::uint64_t oracle_n = 1'000'000;
  std::uint64_t oracle_seed = 2;
  int oracle_threads = 1;
  bool oracle_tube_as_printed = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "direct Monte Carlo on the true limit state");
  oracle_cmd->add_option("problem", oracle_problem, "built-in problem name or JSON problem file")
      ->required();
  oracle_cmd->add_option("-n", oracle_n, "number of samples (default 1000000)");
  oracle_cmd->add_option("--seed", oracle_seed, "seed (default 2)");
  oracle_cmd->add_option("--threads", oracle_threads, "worker threads")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--json", oracle_json, "also write the estimate as JSON");
  oracle_cmd->add_flag("--tube-as-printed", oracle_tube_as_printed, "tube: F2 axial term uses theta1");

  bool list_json = false;
  auto* list_cmd = app.add_subcommand("list", "list built-in problems");
  list_cmd->add_flag("--json", list_json, "print a JSON array");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*oracle_cmd) {
      return cmd_oracle(oracle_problem, oracle_n, oracle_seed, oracle_threads,
                        oracle_tube_as_printed, oracle_json);
    }
    if (*list_cmd) return cmd_list(list_json);
  } catch (const ssrm::SsrmAborted& e) {
    std::cerr << "error: " << e.what() << " (after " << e.partial().iterations
              << " iterations)\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

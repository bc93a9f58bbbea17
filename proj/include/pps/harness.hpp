#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pps/engine.hpp"
#include "pps/stats.hpp"

namespace pps {

/// Experiment matrix: every (problem, algorithm) pair is run `runs` times
/// with paired seeds (run index i uses seed_base + i for every algorithm).
struct ExperimentConfig {
    EngineConfig engine;
    std::vector<std::string> problems;   ///< defaults to every registered problem
    std::vector<std::string> algorithms = {"pps", "cdp", "sr", "epsilon"};
    int runs = 30;
    std::uint64_t seed_base = 1;
    int dimension = 30;                  ///< decision-space size passed to the problems
    int jobs = 0;                        ///< worker threads; 0 means hardware concurrency
    int front_size = 0;                  ///< reference-front density; 0 means the metric default
};

/// Parses a flat `key = value` config file with '#' comments. Unknown keys,
/// type mismatches (reported with their line number), and out-of-range
/// values raise ConfigError. Absent keys keep their defaults.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Final metric values of one finished run; unset when the archive is empty.
struct RunMetrics {
    std::optional<double> igd;
    std::optional<double> hypervolume;
};

/// Quality indicators of a run's archive against the problem's front.
RunMetrics evaluate_run(const RunRecord& record, const ReferenceFront& front);

/// Writes archive.csv, trace.csv, and summary.json for one run into `dir`
/// (created if missing). Outputs are byte-stable for identical records.
void write_run_outputs(const std::filesystem::path& dir, const std::string& problem_name,
                       const std::string& algorithm, std::uint64_t seed, const RunRecord& record,
                       const RunMetrics& metrics);

/// Runs one (problem, algorithm, seed) cell and writes its outputs under
/// out_dir/<problem>/<algorithm>/seed_<seed>/. Returns the run's metrics.
RunMetrics run_single(const std::string& problem_name, const std::string& algorithm,
                      std::uint64_t seed, const ExperimentConfig& cfg,
                      const std::filesystem::path& out_dir, bool write_outputs = true);

/// Runs the full matrix on a bounded worker pool, writes per-run outputs,
/// and aggregates IGD and hypervolume comparison tables (CSV and text)
/// against the first algorithm as baseline.
void run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

/// Sensitivity sweep over the switch-detector window: `runs` paired-seed
/// runs of the push-pull handler per window value, aggregated into
/// sweep_l.csv (mean and deviation of final IGD and hypervolume).
void sweep_change_window(const ExperimentConfig& cfg, const std::string& problem_name,
                         const std::vector<int>& window_values,
                         const std::filesystem::path& out_dir);

/// JSON manifest of the registered problems at the given dimension.
std::string problem_manifest(int dimension);

/// Command-line entry point (subcommands: run, experiment, sweep-l,
/// list-problems). Returns the process exit status: 0 on success, 2 for
/// configuration or usage errors, 1 for runtime failures.
int cli_main(int argc, const char* const* argv);

} // namespace pps

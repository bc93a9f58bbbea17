#include "pps/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "pps/metrics.hpp"

namespace pps {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

[[noreturn]] void bad_value(int line, const std::string& key, const char* kind,
                            const std::string& value) {
    throw ConfigError("config line " + std::to_string(line) + ": key '" + key + "' expects " +
                      kind + ", got '" + value + "'");
}

long long parse_int(int line, const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long parsed = 0;
    try {
        parsed = std::stoll(value, &used);
    } catch (const std::exception&) {
        bad_value(line, key, "an integer", value);
    }
    if (used != value.size()) bad_value(line, key, "an integer", value);
    return parsed;
}

double parse_real(int line, const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &used);
    } catch (const std::exception&) {
        bad_value(line, key, "a real number", value);
    }
    if (used != value.size()) bad_value(line, key, "a real number", value);
    return parsed;
}

void require_range(bool ok, const std::string& key, const std::string& what) {
    if (!ok) throw ConfigError("config key '" + key + "' " + what);
}

} // namespace

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");

    ExperimentConfig cfg;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto comment = raw.find('#');
        if (comment != std::string::npos) raw.erase(comment);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "problems") {
            cfg.problems = split_list(value);
        } else if (key == "algorithms") {
            cfg.algorithms = split_list(value);
        } else if (key == "runs") {
            cfg.runs = static_cast<int>(parse_int(line_no, key, value));
            require_range(cfg.runs >= 1, key, "must be at least 1");
        } else if (key == "seed_base") {
            const long long v = parse_int(line_no, key, value);
            require_range(v >= 0, key, "must be non-negative");
            cfg.seed_base = static_cast<std::uint64_t>(v);
        } else if (key == "n") {
            cfg.dimension = static_cast<int>(parse_int(line_no, key, value));
            require_range(cfg.dimension >= 1, key, "must be at least 1");
        } else if (key == "jobs") {
            cfg.jobs = static_cast<int>(parse_int(line_no, key, value));
            require_range(cfg.jobs >= 0, key, "must be non-negative");
        } else if (key == "front_size") {
            cfg.front_size = static_cast<int>(parse_int(line_no, key, value));
            require_range(cfg.front_size >= 0, key, "must be non-negative");
        } else if (key == "pop") {
            cfg.engine.population = static_cast<int>(parse_int(line_no, key, value));
            require_range(cfg.engine.population >= 2, key, "must be at least 2");
        } else if (key == "t") {
            cfg.engine.neighborhood = static_cast<int>(parse_int(line_no, key, value));
            require_range(cfg.engine.neighborhood >= 2, key, "must be at least 2");
        } else if (key == "delta") {
            cfg.engine.delta = parse_real(line_no, key, value);
            require_range(cfg.engine.delta >= 0.0 && cfg.engine.delta <= 1.0, key,
                          "must lie in [0, 1]");
        } else if (key == "nr") {
            cfg.engine.nr = static_cast<int>(parse_int(line_no, key, value));
            require_range(cfg.engine.nr >= 1, key, "must be at least 1");
        } else if (key == "tc") {
            cfg.engine.tc = static_cast<int>(parse_int(line_no, key, value));
            require_range(cfg.engine.tc >= 1, key, "must be at least 1");
        } else if (key == "alpha") {
            cfg.engine.alpha = parse_real(line_no, key, value);
            require_range(cfg.engine.alpha >= 0.0 && cfg.engine.alpha <= 1.0, key,
                          "must lie in [0, 1]");
        } else if (key == "tau") {
            cfg.engine.tau = parse_real(line_no, key, value);
            require_range(cfg.engine.tau >= 0.0 && cfg.engine.tau <= 1.0, key,
                          "must lie in [0, 1]");
        } else if (key == "cp") {
            cfg.engine.cp = parse_real(line_no, key, value);
            require_range(cfg.engine.cp > 0.0, key, "must be positive");
        } else if (key == "l") {
            cfg.engine.change_window = static_cast<int>(parse_int(line_no, key, value));
            require_range(cfg.engine.change_window >= 1, key, "must be at least 1");
        } else if (key == "switch_threshold") {
            cfg.engine.switch_threshold = parse_real(line_no, key, value);
            require_range(cfg.engine.switch_threshold >= 0.0, key, "must be non-negative");
        } else if (key == "evals") {
            cfg.engine.max_evals = parse_int(line_no, key, value);
            require_range(cfg.engine.max_evals >= 1, key, "must be at least 1");
        } else if (key == "f") {
            cfg.engine.variation.de_f = parse_real(line_no, key, value);
            require_range(cfg.engine.variation.de_f > 0.0, key, "must be positive");
        } else if (key == "cr") {
            cfg.engine.variation.de_cr = parse_real(line_no, key, value);
            require_range(cfg.engine.variation.de_cr >= 0.0 && cfg.engine.variation.de_cr <= 1.0,
                          key, "must lie in [0, 1]");
        } else if (key == "pm") {
            const double pm = parse_real(line_no, key, value);
            require_range(pm >= 0.0 && pm <= 1.0, key, "must lie in [0, 1]");
            cfg.engine.variation.pm = pm;
        } else if (key == "eta_m") {
            cfg.engine.variation.eta_m = parse_real(line_no, key, value);
            require_range(cfg.engine.variation.eta_m > 0.0, key, "must be positive");
        } else if (key == "sr_pf") {
            cfg.engine.sr_pf = parse_real(line_no, key, value);
            require_range(cfg.engine.sr_pf >= 0.0 && cfg.engine.sr_pf <= 1.0, key,
                          "must lie in [0, 1]");
        } else if (key == "epsilon_theta") {
            cfg.engine.epsilon_theta = parse_real(line_no, key, value);
            require_range(cfg.engine.epsilon_theta > 0.0 && cfg.engine.epsilon_theta <= 1.0, key,
                          "must lie in (0, 1]");
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key +
                              "'");
        }
    }

    if (cfg.problems.empty()) cfg.problems = problem_names();
    for (const auto& name : cfg.problems) make_problem(name, std::max(cfg.dimension, 2));
    for (const auto& name : cfg.algorithms)
        if (!handler_from_name(name))
            throw ConfigError("unknown algorithm '" + name + "' (known: pps, cdp, sr, epsilon)");
    return cfg;
}

RunMetrics evaluate_run(const RunRecord& record, const ReferenceFront& front) {
    RunMetrics metrics;
    if (record.archive.empty() || front.points.empty()) return metrics;
    std::vector<ObjectiveVector> objectives;
    objectives.reserve(record.archive.size());
    for (const auto& ind : record.archive) objectives.push_back(ind.f);
    metrics.igd = igd(front, objectives);
    metrics.hypervolume = hypervolume(objectives, hypervolume_reference(front));
    return metrics;
}

void write_run_outputs(const std::filesystem::path& dir, const std::string& problem_name,
                       const std::string& algorithm, std::uint64_t seed, const RunRecord& record,
                       const RunMetrics& metrics) {
    std::filesystem::create_directories(dir);

    const std::size_t m = record.population.empty() ? 0 : record.population.front().f.size();
    {
        std::ofstream out(dir / "archive.csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (dir / "archive.csv").string());
        for (std::size_t j = 1; j <= m; ++j) out << "f" << j << ",";
        out << "violation\n";
        for (const auto& ind : record.archive) {
            for (double v : ind.f) out << fmt("%.17e", v) << ",";
            out << fmt("%.17e", ind.violation) << "\n";
        }
    }
    {
        std::ofstream out(dir / "trace.csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (dir / "trace.csv").string());
        const bool with_igd =
            std::any_of(record.trace.begin(), record.trace.end(),
                        [](const TraceRow& row) { return !std::isnan(row.igd); });
        out << "gen,stage,r_k,epsilon,feasible_ratio,evals" << (with_igd ? ",igd\n" : "\n");
        for (const auto& row : record.trace) {
            out << row.generation << "," << (row.push_stage ? "push" : "pull") << ","
                << fmt("%.10g", row.r_k) << "," << fmt("%.10g", row.epsilon) << ","
                << fmt("%.10g", row.feasible_ratio) << "," << row.evals;
            if (with_igd) {
                out << ",";
                if (!std::isnan(row.igd)) out << fmt("%.10g", row.igd);
            }
            out << "\n";
        }
    }
    {
        nlohmann::json summary;
        summary["problem"] = problem_name;
        summary["algorithm"] = algorithm;
        summary["seed"] = seed;
        summary["switch_generation"] = record.switch_generation;
        summary["final_igd"] = metrics.igd ? nlohmann::json(*metrics.igd) : nlohmann::json();
        summary["final_hv"] =
            metrics.hypervolume ? nlohmann::json(*metrics.hypervolume) : nlohmann::json();
        summary["evals"] = record.evals;
        std::ofstream out(dir / "summary.json", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (dir / "summary.json").string());
        out << summary.dump(2) << "\n";
    }
}

RunMetrics run_single(const std::string& problem_name, const std::string& algorithm,
                      std::uint64_t seed, const ExperimentConfig& cfg,
                      const std::filesystem::path& out_dir, bool write_outputs) {
    const auto handler = handler_from_name(algorithm);
    if (!handler)
        throw ConfigError("unknown algorithm '" + algorithm + "' (known: pps, cdp, sr, epsilon)");
    const auto problem = make_problem(problem_name, cfg.dimension);

    EngineConfig engine_cfg = cfg.engine;
    engine_cfg.seed = seed;
    engine_cfg.trace_front_size = cfg.front_size;
    const RunRecord record = run(*problem, engine_cfg, *handler);

    ReferenceFront front;
    if (problem->has_reference_front())
        front = problem->reference_front(cfg.front_size > 0 ? cfg.front_size
                                                            : problem->default_front_size());
    const RunMetrics metrics = evaluate_run(record, front);

    if (write_outputs)
        write_run_outputs(out_dir / problem_name / algorithm / ("seed_" + std::to_string(seed)),
                          problem_name, algorithm, seed, record, metrics);
    return metrics;
}

namespace {

void parallel_tasks(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs)
                                   : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

nlohmann::json engine_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["pop"] = cfg.engine.population;
    j["t"] = cfg.engine.neighborhood;
    j["delta"] = cfg.engine.delta;
    j["nr"] = cfg.engine.nr;
    j["tc"] = cfg.engine.tc;
    j["alpha"] = cfg.engine.alpha;
    j["tau"] = cfg.engine.tau;
    j["cp"] = cfg.engine.cp;
    j["l"] = cfg.engine.change_window;
    j["switch_threshold"] = cfg.engine.switch_threshold;
    j["evals"] = cfg.engine.max_evals;
    j["f"] = cfg.engine.variation.de_f;
    j["cr"] = cfg.engine.variation.de_cr;
    j["pm"] = cfg.engine.variation.pm ? nlohmann::json(*cfg.engine.variation.pm)
                                      : nlohmann::json();
    j["eta_m"] = cfg.engine.variation.eta_m;
    j["sr_pf"] = cfg.engine.sr_pf;
    j["epsilon_theta"] = cfg.engine.epsilon_theta;
    return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

} // namespace

void run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir) {
    ExperimentConfig cfg = config;
    if (cfg.problems.empty()) cfg.problems = problem_names();
    if (cfg.algorithms.empty())
        throw ConfigError("experiment needs at least one algorithm");

    struct Task {
        std::string problem;
        std::string algorithm;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    tasks.reserve(cfg.problems.size() * cfg.algorithms.size() * static_cast<std::size_t>(cfg.runs));
    for (const auto& problem : cfg.problems)
        for (const auto& algorithm : cfg.algorithms)
            for (int r = 0; r < cfg.runs; ++r)
                tasks.push_back({problem, algorithm, cfg.seed_base + static_cast<std::uint64_t>(r)});

    std::vector<RunMetrics> results(tasks.size());
    parallel_tasks(tasks.size(), cfg.jobs, [&](std::size_t i) {
        results[i] = run_single(tasks[i].problem, tasks[i].algorithm, tasks[i].seed, cfg, out_dir);
    });

    MetricRecords igd_records, hv_records;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto key = std::make_pair(tasks[i].problem, tasks[i].algorithm);
        if (results[i].igd) igd_records[key].push_back(*results[i].igd);
        if (results[i].hypervolume) hv_records[key].push_back(*results[i].hypervolume);
    }

    const std::string baseline = cfg.algorithms.front();
    const auto igd_table =
        build_comparison_table(igd_records, baseline, "igd", Orientation::SmallerBetter);
    const auto hv_table =
        build_comparison_table(hv_records, baseline, "hv", Orientation::LargerBetter);

    std::filesystem::create_directories(out_dir);
    write_text_file(out_dir / "table_igd.csv", table_to_csv(igd_table));
    write_text_file(out_dir / "table_igd.txt", table_to_text(igd_table));
    write_text_file(out_dir / "table_hv.csv", table_to_csv(hv_table));
    write_text_file(out_dir / "table_hv.txt", table_to_text(hv_table));

    nlohmann::json manifest;
    manifest["problems"] = cfg.problems;
    manifest["algorithms"] = cfg.algorithms;
    manifest["runs"] = cfg.runs;
    manifest["seed_base"] = cfg.seed_base;
    manifest["paired_seeds"] = true;
    manifest["n"] = cfg.dimension;
    manifest["front_size"] = cfg.front_size;
    manifest["engine"] = engine_json(cfg);
    write_text_file(out_dir / "experiment.json", manifest.dump(2) + "\n");
}

void sweep_change_window(const ExperimentConfig& config, const std::string& problem_name,
                         const std::vector<int>& window_values,
                         const std::filesystem::path& out_dir) {
    if (window_values.empty()) throw ConfigError("sweep needs at least one window value");
    for (int l : window_values)
        if (l < 1) throw ConfigError("sweep window values must be at least 1");

    struct Task {
        int window;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (int l : window_values)
        for (int r = 0; r < config.runs; ++r)
            tasks.push_back({l, config.seed_base + static_cast<std::uint64_t>(r)});

    std::vector<RunMetrics> results(tasks.size());
    parallel_tasks(tasks.size(), config.jobs, [&](std::size_t i) {
        ExperimentConfig cfg = config;
        cfg.engine.change_window = tasks[i].window;
        results[i] = run_single(problem_name, "pps", tasks[i].seed, cfg, out_dir, false);
    });

    std::string csv = "l,mean_igd,std_igd,mean_hv,std_hv,runs\n";
    std::size_t offset = 0;
    for (int l : window_values) {
        std::vector<double> igds, hvs;
        for (int r = 0; r < config.runs; ++r, ++offset) {
            if (results[offset].igd) igds.push_back(*results[offset].igd);
            if (results[offset].hypervolume) hvs.push_back(*results[offset].hypervolume);
        }
        csv += std::to_string(l) + ",";
        csv += igds.empty() ? "," : fmt("%.17e", summarize(igds).mean) + "," +
                                        fmt("%.17e", summarize(igds).stddev);
        csv += ",";
        csv += hvs.empty() ? "," : fmt("%.17e", summarize(hvs).mean) + "," +
                                       fmt("%.17e", summarize(hvs).stddev);
        csv += "," + std::to_string(igds.size()) + "\n";
    }
    std::filesystem::create_directories(out_dir);
    write_text_file(out_dir / "sweep_l.csv", csv);
}

std::string problem_manifest(int dimension) {
    nlohmann::json manifest = nlohmann::json::array();
    for (const auto& name : problem_names()) {
        const auto problem = make_problem(name, dimension);
        manifest.push_back({{"name", problem->name()},
                            {"n", problem->dimension()},
                            {"m", problem->num_objectives()},
                            {"q", problem->num_inequalities()},
                            {"p", problem->num_equalities()}});
    }
    return manifest.dump(2) + "\n";
}

namespace {

void add_engine_options(CLI::App* cmd, ExperimentConfig& cfg) {
    cmd->add_option("--evals", cfg.engine.max_evals, "function-evaluation budget");
    cmd->add_option("--pop", cfg.engine.population, "population size");
    cmd->add_option("--n", cfg.dimension, "decision-space dimension");
    cmd->add_option("--t", cfg.engine.neighborhood, "neighborhood size");
    cmd->add_option("--delta", cfg.engine.delta, "neighborhood mating probability");
    cmd->add_option("--nr", cfg.engine.nr, "replacement cap per child");
    cmd->add_option("--tc", cfg.engine.tc, "generation at which epsilon reaches 0");
    cmd->add_option("--alpha", cfg.engine.alpha, "feasible-ratio threshold");
    cmd->add_option("--tau", cfg.engine.tau, "epsilon shrink rate");
    cmd->add_option("--cp", cfg.engine.cp, "epsilon decay exponent");
    cmd->add_option("--l", cfg.engine.change_window, "switch-detector window");
    cmd->add_option("--switch-threshold", cfg.engine.switch_threshold, "push-to-pull threshold");
    cmd->add_option("--f", cfg.engine.variation.de_f, "differential-evolution scale factor");
    cmd->add_option("--cr", cfg.engine.variation.de_cr, "crossover rate");
    cmd->add_option("--eta-m", cfg.engine.variation.eta_m, "mutation distribution index");
    cmd->add_option("--sr-pf", cfg.engine.sr_pf, "stochastic-ranking probability");
    cmd->add_option("--epsilon-theta", cfg.engine.epsilon_theta, "static-epsilon quantile");
    cmd->add_option("--front-size", cfg.front_size, "reference-front density (0 = default)");
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Push-pull constrained multi-objective optimization toolkit"};
    app.require_subcommand(1);

    ExperimentConfig base;

    // run
    auto* cmd_run = app.add_subcommand("run", "run one (problem, algorithm, seed) cell");
    std::string run_problem, run_algorithm = "pps", run_out = "results";
    std::uint64_t run_seed = 1;
    double run_pm = -1.0;
    bool run_trace_igd = false;
    cmd_run->add_option("--problem", run_problem, "problem name")->required();
    cmd_run->add_option("--algorithm", run_algorithm, "pps|cdp|sr|epsilon");
    cmd_run->add_option("--seed", run_seed, "rng seed");
    cmd_run->add_option("--out", run_out, "output directory");
    cmd_run->add_option("--pm", run_pm, "mutation rate (default 1/n)");
    cmd_run->add_flag("--trace-igd", run_trace_igd, "record archive igd per generation");
    add_engine_options(cmd_run, base);

    // experiment
    auto* cmd_exp = app.add_subcommand("experiment", "run a problems x algorithms x seeds matrix");
    std::string exp_config, exp_out = "results";
    int exp_jobs = -1;
    cmd_exp->add_option("--config", exp_config, "config file (key = value lines)");
    cmd_exp->add_option("--out", exp_out, "output directory");
    cmd_exp->add_option("--jobs", exp_jobs, "worker threads (overrides config)");

    // sweep-l
    auto* cmd_sweep = app.add_subcommand("sweep-l", "sensitivity sweep over the detector window");
    std::string sweep_problem, sweep_out = "results";
    std::vector<int> sweep_values;
    cmd_sweep->add_option("--problem", sweep_problem, "problem name")->required();
    cmd_sweep->add_option("--values", sweep_values, "window values")
        ->required()
        ->delimiter(',');
    cmd_sweep->add_option("--out", sweep_out, "output directory");
    cmd_sweep->add_option("--runs", base.runs, "runs per window value");
    cmd_sweep->add_option("--seed-base", base.seed_base, "first seed of the paired set");
    cmd_sweep->add_option("--jobs", base.jobs, "worker threads");
    add_engine_options(cmd_sweep, base);

    // list-problems
    auto* cmd_list = app.add_subcommand("list-problems", "print the problem manifest as json");
    int list_dimension = 30;
    cmd_list->add_option("--n", list_dimension, "decision-space dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_run->parsed()) {
            if (run_pm >= 0.0) base.engine.variation.pm = run_pm;
            base.engine.record_igd = run_trace_igd;
            run_single(run_problem, run_algorithm, run_seed, base, run_out);
            std::cout << "wrote "
                      << (std::filesystem::path(run_out) / run_problem / run_algorithm /
                          ("seed_" + std::to_string(run_seed)))
                             .string()
                      << "\n";
        } else if (cmd_exp->parsed()) {
            ExperimentConfig cfg = exp_config.empty() ? ExperimentConfig{} : load_config(exp_config);
            if (exp_jobs >= 0) cfg.jobs = exp_jobs;
            run_experiment(cfg, exp_out);
            std::cout << "wrote " << exp_out << "\n";
        } else if (cmd_sweep->parsed()) {
            sweep_change_window(base, sweep_problem, sweep_values, sweep_out);
            std::cout << "wrote " << (std::filesystem::path(sweep_out) / "sweep_l.csv").string()
                      << "\n";
        } else if (cmd_list->parsed()) {
            std::cout << problem_manifest(list_dimension);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace pps

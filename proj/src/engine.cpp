#include "pps/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "pps/metrics.hpp"
#include "pps/rng.hpp"

namespace pps {

StageHistory::StageHistory(int window) : window_(window) {
    if (window < 1) throw ConfigError("StageHistory: window must be at least 1");
}

void StageHistory::record(IdealNadirPair entry) {
    entries_.push_back(std::move(entry));
    if (static_cast<int>(entries_.size()) > window_ + 1) entries_.pop_front();
}

namespace {

double relative_change(const ObjectiveVector& older, const ObjectiveVector& newer) {
    double rate = 0.0;
    for (std::size_t j = 0; j < older.size(); ++j) {
        const double denom = std::max(std::fabs(older[j]), 1e-6);
        rate = std::max(rate, std::fabs(newer[j] - older[j]) / denom);
    }
    return rate;
}

} // namespace

double StageHistory::max_change_rate() const {
    if (!ready()) return 1.0;
    const IdealNadirPair& oldest = entries_.front();
    const IdealNadirPair& newest = entries_.back();
    return std::max(relative_change(oldest.ideal, newest.ideal),
                    relative_change(oldest.nadir, newest.nadir));
}

double update_epsilon(double previous, double epsilon0, double feasible_ratio, int generation,
                      const EngineConfig& cfg) {
    if (generation >= cfg.tc) return 0.0;
    const double level =
        feasible_ratio < cfg.alpha
            ? (1.0 - cfg.tau) * previous
            : epsilon0 * std::pow(1.0 - static_cast<double>(generation) /
                                            static_cast<double>(cfg.tc),
                                  cfg.cp);
    // The decay curve is pinned to absolute generation numbers, so when the
    // feasible ratio recovers after a stretch of tau-shrinks the curve can sit
    // far above the shrunk level; the relaxation must only ever tighten.
    return std::min(previous, level);
}

std::vector<double> crowding_distances(const std::vector<ObjectiveVector>& points) {
    const std::size_t k = points.size();
    std::vector<double> distance(k, 0.0);
    if (k == 0) return distance;
    const std::size_t m = points.front().size();
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<std::size_t> order(k);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < k; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (points[a][j] != points[b][j]) return points[a][j] < points[b][j];
            return a < b;
        });
        const double span = points[order.back()][j] - points[order.front()][j];
        distance[order.front()] = inf;
        distance[order.back()] = inf;
        if (span <= 0.0) continue;
        for (std::size_t i = 1; i + 1 < k; ++i) {
            if (distance[order[i]] == inf) continue;
            distance[order[i]] += (points[order[i + 1]][j] - points[order[i - 1]][j]) / span;
        }
    }
    return distance;
}

std::vector<Individual> nd_select(const std::vector<Individual>& archive,
                                  const std::vector<Individual>& population, int capacity) {
    if (capacity < 1) throw ConfigError("nd_select: capacity must be at least 1");

    std::vector<const Individual*> pool;
    pool.reserve(archive.size() + population.size());
    for (const auto& ind : archive)
        if (ind.feasible()) pool.push_back(&ind);
    for (const auto& ind : population)
        if (ind.feasible()) pool.push_back(&ind);

    // Drop exact objective duplicates, keeping the earliest copy.
    std::vector<const Individual*> unique;
    unique.reserve(pool.size());
    for (const Individual* candidate : pool) {
        bool seen = false;
        for (const Individual* kept : unique)
            if (kept->f == candidate->f) {
                seen = true;
                break;
            }
        if (!seen) unique.push_back(candidate);
    }

    std::vector<const Individual*> front;
    front.reserve(unique.size());
    for (const Individual* candidate : unique) {
        bool dominated = false;
        for (const Individual* other : unique)
            if (other != candidate && dominates(other->f, candidate->f)) {
                dominated = true;
                break;
            }
        if (!dominated) front.push_back(candidate);
    }

    if (static_cast<int>(front.size()) > capacity) {
        std::vector<ObjectiveVector> objectives;
        objectives.reserve(front.size());
        for (const Individual* ind : front) objectives.push_back(ind->f);
        const auto crowding = crowding_distances(objectives);
        std::vector<std::size_t> order(front.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (crowding[a] != crowding[b]) return crowding[a] > crowding[b];
            return a < b;
        });
        order.resize(static_cast<std::size_t>(capacity));
        std::sort(order.begin(), order.end()); // keep stable insertion order
        std::vector<const Individual*> kept;
        kept.reserve(order.size());
        for (std::size_t idx : order) kept.push_back(front[idx]);
        front = std::move(kept);
    }

    std::vector<Individual> result;
    result.reserve(front.size());
    for (const Individual* ind : front) result.push_back(*ind);
    return result;
}

namespace {

void validate(const EngineConfig& cfg, const Problem& problem) {
    const auto require = [](bool ok, const std::string& what) {
        if (!ok) throw ConfigError("engine config: " + what);
    };
    require(cfg.population >= problem.num_objectives(), "population below objective count");
    require(cfg.neighborhood >= 2 && cfg.neighborhood <= cfg.population,
            "neighborhood size outside [2, population]");
    require(cfg.delta >= 0.0 && cfg.delta <= 1.0, "delta outside [0, 1]");
    require(cfg.nr >= 1, "nr must be at least 1");
    require(cfg.tc >= 1, "tc must be at least 1");
    require(cfg.alpha >= 0.0 && cfg.alpha <= 1.0, "alpha outside [0, 1]");
    require(cfg.tau >= 0.0 && cfg.tau <= 1.0, "tau outside [0, 1]");
    require(cfg.cp > 0.0, "cp must be positive");
    require(cfg.change_window >= 1, "change window must be at least 1");
    require(!(cfg.switch_threshold < 0.0) && !std::isnan(cfg.switch_threshold),
            "switch threshold must be non-negative");
    require(cfg.max_evals >= 2L * cfg.population,
            "evaluation budget below initialization plus one generation");
    require(cfg.variation.de_f > 0.0, "de scale factor must be positive");
    require(cfg.variation.de_cr >= 0.0 && cfg.variation.de_cr <= 1.0, "de cr outside [0, 1]");
    require(cfg.variation.eta_m > 0.0, "eta_m must be positive");
    const double pm = cfg.variation.resolved_pm(problem.dimension());
    require(pm >= 0.0 && pm <= 1.0, "pm outside [0, 1]");
    require(cfg.sr_pf >= 0.0 && cfg.sr_pf <= 1.0, "sr_pf outside [0, 1]");
    require(cfg.epsilon_theta > 0.0 && cfg.epsilon_theta <= 1.0, "epsilon_theta outside (0, 1]");
}

IdealNadirPair population_extremes(const std::vector<Individual>& population, std::size_t m) {
    IdealNadirPair pair;
    pair.ideal.assign(m, std::numeric_limits<double>::infinity());
    pair.nadir.assign(m, -std::numeric_limits<double>::infinity());
    for (const auto& ind : population)
        for (std::size_t j = 0; j < m; ++j) {
            pair.ideal[j] = std::min(pair.ideal[j], ind.f[j]);
            pair.nadir[j] = std::max(pair.nadir[j], ind.f[j]);
        }
    return pair;
}

double feasible_ratio(const std::vector<Individual>& population) {
    std::size_t feasible = 0;
    for (const auto& ind : population)
        if (ind.feasible()) ++feasible;
    return static_cast<double>(feasible) / static_cast<double>(population.size());
}

double max_violation(const std::vector<Individual>& population) {
    double worst = 0.0;
    for (const auto& ind : population) worst = std::max(worst, ind.violation);
    return worst;
}

// Violation of the ceil(theta * N)-th most violating member, the customary
// starting level for the static epsilon schedule.
double initial_epsilon_level(const std::vector<Individual>& population, double theta) {
    std::vector<double> violations;
    violations.reserve(population.size());
    for (const auto& ind : population) violations.push_back(ind.violation);
    std::sort(violations.begin(), violations.end(), std::greater<double>());
    const auto rank = static_cast<std::size_t>(
        std::max(1.0, std::ceil(theta * static_cast<double>(population.size()))));
    return violations[std::min(rank, violations.size()) - 1];
}

#ifndef NDEBUG
bool archive_invariants_hold(const std::vector<Individual>& archive) {
    for (const auto& a : archive) {
        if (!a.feasible()) return false;
        for (const auto& b : archive)
            if (&a != &b && dominates(b.f, a.f)) return false;
    }
    return true;
}
#endif

} // namespace

RunRecord run(const Problem& problem, const EngineConfig& cfg, ConstraintHandler handler,
              const GenerationObserver& observer) {
    validate(cfg, problem);

    const int n = problem.dimension();
    const std::size_t m = static_cast<std::size_t>(problem.num_objectives());
    const int N = cfg.population;
    const auto& bounds = problem.bounds();

    VariationConfig variation = cfg.variation;
    variation.pm = variation.resolved_pm(n);

    const auto weights = generate_weights(static_cast<int>(m), N);
    const auto neighborhoods = build_neighborhoods(weights, cfg.neighborhood);

    Rng rng(cfg.seed);

    RunRecord record;
    record.population.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        DecisionVector x(static_cast<std::size_t>(n));
        for (int d = 0; d < n; ++d)
            x[static_cast<std::size_t>(d)] =
                rng.uniform(bounds[static_cast<std::size_t>(d)].lower, bounds[static_cast<std::size_t>(d)].upper);
        record.population.push_back(problem.evaluate(x));
    }
    record.evals = N;

    ObjectiveVector ideal = population_extremes(record.population, m).ideal;

    const ReferenceFront front =
        cfg.record_igd && problem.has_reference_front()
            ? problem.reference_front(cfg.trace_front_size > 0 ? cfg.trace_front_size
                                                               : problem.default_front_size())
            : ReferenceFront{};

    StageHistory history(cfg.change_window);
    bool push_stage = handler == ConstraintHandler::Pps;
    double epsilon = 0.0;
    double epsilon0 = 0.0;
    if (handler == ConstraintHandler::StaticEpsilon)
        epsilon0 = initial_epsilon_level(record.population, cfg.epsilon_theta);
    double r_k = 1.0;

    std::vector<int> all_indices(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) all_indices[static_cast<std::size_t>(i)] = i;
    std::vector<int> pool;

    int generation = 0;
    while (record.evals + N <= cfg.max_evals) {
        history.record(population_extremes(record.population, m));
        if (history.ready()) r_k = history.max_change_rate();
        const double rf = feasible_ratio(record.population);

        switch (handler) {
            case ConstraintHandler::Pps:
                if (push_stage) {
                    if (history.ready() && r_k <= cfg.switch_threshold) {
                        push_stage = false;
                        record.switch_generation = generation;
                        epsilon0 = max_violation(record.population);
                        epsilon = generation >= cfg.tc ? 0.0 : epsilon0;
                    }
                } else {
                    epsilon = update_epsilon(epsilon, epsilon0, rf, generation, cfg);
                }
                break;
            case ConstraintHandler::StaticEpsilon:
                epsilon = generation >= cfg.tc
                              ? 0.0
                              : epsilon0 * std::pow(1.0 - static_cast<double>(generation) /
                                                              static_cast<double>(cfg.tc),
                                                    cfg.cp);
                break;
            case ConstraintHandler::Cdp:
            case ConstraintHandler::Sr:
                break;
        }

        const auto permutation = rng.permutation(N);
        for (int slot = 0; slot < N; ++slot) {
            const int j = permutation[static_cast<std::size_t>(slot)];
            const bool local = rng.uniform() < cfg.delta;
            const std::vector<int>& mating = local ? neighborhoods[static_cast<std::size_t>(j)] : all_indices;

            // Two distinct donor indices from the mating pool.
            const int pick1 = rng.uniform_int(static_cast<int>(mating.size()));
            int pick2 = rng.uniform_int(static_cast<int>(mating.size()) - 1);
            if (pick2 >= pick1) ++pick2;
            const int r1 = mating[static_cast<std::size_t>(pick1)];
            const int r2 = mating[static_cast<std::size_t>(pick2)];

            DecisionVector y = de_offspring(record.population[static_cast<std::size_t>(j)].x,
                                            record.population[static_cast<std::size_t>(r1)].x,
                                            record.population[static_cast<std::size_t>(r2)].x,
                                            bounds, variation, rng);
            y = polynomial_mutation(y, bounds, variation, rng);
            const Individual child = problem.evaluate(y);
            ++record.evals;

            for (std::size_t c = 0; c < m; ++c) ideal[c] = std::min(ideal[c], child.f[c]);

            pool = mating;
            int replaced = 0;
            while (replaced < cfg.nr && !pool.empty()) {
                const int pick = rng.uniform_int(static_cast<int>(pool.size()));
                const int u = pool[static_cast<std::size_t>(pick)];
                pool[static_cast<std::size_t>(pick)] = pool.back();
                pool.pop_back();

                Individual& incumbent = record.population[static_cast<std::size_t>(u)];
                const WeightVector& w = weights[static_cast<std::size_t>(u)];
                bool replace = false;
                switch (handler) {
                    case ConstraintHandler::Pps:
                        replace = push_stage ? push_replace(incumbent, child, w, ideal)
                                             : pull_replace(incumbent, child, w, ideal, epsilon);
                        break;
                    case ConstraintHandler::Cdp:
                        replace = cdp_replace(incumbent, child, w, ideal);
                        break;
                    case ConstraintHandler::Sr:
                        replace = sr_replace(incumbent, child, w, ideal, cfg.sr_pf, rng);
                        break;
                    case ConstraintHandler::StaticEpsilon:
                        replace = pull_replace(incumbent, child, w, ideal, epsilon);
                        break;
                }
                if (replace) {
                    incumbent = child;
                    ++replaced;
                }
            }
        }

        record.archive = nd_select(record.archive, record.population, N);
        assert(archive_invariants_hold(record.archive));

        TraceRow row;
        row.generation = generation;
        row.push_stage = push_stage;
        row.r_k = r_k;
        row.epsilon = epsilon;
        row.feasible_ratio = rf;
        row.evals = record.evals;
        if (cfg.record_igd && !front.points.empty() && !record.archive.empty()) {
            std::vector<ObjectiveVector> objectives;
            objectives.reserve(record.archive.size());
            for (const auto& ind : record.archive) objectives.push_back(ind.f);
            row.igd = igd(front, objectives);
        }
        record.trace.push_back(row);

        if (observer)
            observer(GenerationView{generation, push_stage, r_k, epsilon, rf, record.evals,
                                    record.population, record.archive, ideal});
        ++generation;
    }

    return record;
}

} // namespace pps

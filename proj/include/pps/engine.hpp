#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <vector>

#include "pps/core.hpp"
#include "pps/decomposition.hpp"
#include "pps/problems.hpp"
#include "pps/selection.hpp"
#include "pps/variation.hpp"

namespace pps {

/// Engine parameters. Defaults match the standard benchmarking protocol.
struct EngineConfig {
    int population = 300;           ///< N: subproblem count.
    int neighborhood = 30;          ///< T: neighborhood size.
    double delta = 0.9;             ///< Probability of mating within the neighborhood.
    int nr = 2;                     ///< Replacement cap per child.
    int tc = 800;                   ///< Generation after which epsilon is exactly 0.
    double alpha = 0.95;            ///< Feasible-ratio threshold in the epsilon update.
    double tau = 0.1;               ///< Epsilon shrink rate when below alpha.
    double cp = 2.0;                ///< Exponent of the decay schedule.
    int change_window = 20;         ///< l: generations spanned by the switch detector.
    double switch_threshold = 1e-3; ///< Switch to pull once the change rate drops this low.
    long max_evals = 300000;        ///< Total function-evaluation budget (includes init).
    std::uint64_t seed = 1;
    VariationConfig variation;
    double sr_pf = 0.05;            ///< Stochastic-ranking objective-only probability.
    double epsilon_theta = 0.05;    ///< Initial-epsilon quantile for the static schedule.
    bool record_igd = false;        ///< Fill the trace igd column when a front exists.
    int trace_front_size = 0;       ///< Front density for the trace igd; 0 = problem default.
};

/// Ring buffer of per-generation population ideal/nadir pairs driving the
/// push-to-pull switch. The rate compares the newest entry against the one
/// `window` generations older and is 1.0 until that much history exists.
class StageHistory {
public:
    explicit StageHistory(int window);

    void record(IdealNadirPair entry);
    bool ready() const { return static_cast<int>(entries_.size()) == window_ + 1; }

    /// max over ideal and nadir of max_i |new_i - old_i| / max(|old_i|, 1e-6).
    double max_change_rate() const;

private:
    int window_;
    std::deque<IdealNadirPair> entries_;
};

/// One epsilon-schedule step: 0 from generation tc onward, a tau-shrink of
/// the previous level while the feasible ratio is below alpha, and the
/// epsilon0 * (1 - k/tc)^cp decay curve otherwise. The result is clamped to
/// the previous level, so the relaxation never loosens mid-stage.
double update_epsilon(double previous, double epsilon0, double feasible_ratio, int generation,
                      const EngineConfig& cfg);

/// NSGA-II crowding distances for one mutually non-dominated set.
std::vector<double> crowding_distances(const std::vector<ObjectiveVector>& points);

/// Merges archive and population into the feasible non-dominated subset,
/// dropping exact objective duplicates (first occurrence wins) and, beyond
/// `capacity`, the smallest-crowding members (ties keep the smaller index).
std::vector<Individual> nd_select(const std::vector<Individual>& archive,
                                  const std::vector<Individual>& population, int capacity);

/// One trace entry per generation, in execution order.
struct TraceRow {
    int generation = 0;
    bool push_stage = false;
    double r_k = 1.0;
    double epsilon = 0.0;
    double feasible_ratio = 0.0;
    long evals = 0;
    double igd = std::numeric_limits<double>::quiet_NaN(); ///< NaN unless recorded.
};

struct RunRecord {
    std::vector<Individual> archive;
    std::vector<Individual> population;
    std::vector<TraceRow> trace;
    int switch_generation = -1; ///< -1 when the run never left the push stage.
    long evals = 0;
};

/// Read-only view of the engine state at the end of one generation.
struct GenerationView {
    int generation;
    bool push_stage;
    double r_k;
    double epsilon;
    double feasible_ratio;
    long evals;
    const std::vector<Individual>& population;
    const std::vector<Individual>& archive;
    const ObjectiveVector& ideal;
};

using GenerationObserver = std::function<void(const GenerationView&)>;

/// Runs the decomposition engine with the chosen replacement rule until the
/// evaluation budget is spent and returns the feasible non-dominated archive,
/// final population, and per-generation trace.
///
/// Per generation: record population ideal/nadir, evaluate the switch
/// detector once the window is full, apply the stage and epsilon rules of
/// the handler, then sweep the subproblems in a fresh random permutation.
/// Each subproblem draws its mating pool (neighborhood with probability
/// delta, otherwise everyone), builds one child with the incumbent-based DE
/// operator plus polynomial mutation, updates the running ideal point, and
/// lets the child challenge at most nr pool members drawn without
/// replacement. The archive is refreshed once per generation from
/// archive + population.
///
/// Rng draw order per generation: permutation (N-1 integer draws), then per
/// subproblem one uniform() pool gate, two integer draws for the DE donors,
/// the de_offspring and polynomial_mutation draws documented with those
/// operators, one integer draw per replacement candidate, and (stochastic
/// ranking only) one uniform() per comparison.
RunRecord run(const Problem& problem, const EngineConfig& cfg, ConstraintHandler handler,
              const GenerationObserver& observer = {});

} // namespace pps

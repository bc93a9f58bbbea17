#pragma once

#include <optional>
#include <string>

#include "pps/core.hpp"
#include "pps/decomposition.hpp"
#include "pps/rng.hpp"

namespace pps {

/// Replacement rule used when a child challenges a subproblem incumbent.
enum class ConstraintHandler {
    Pps,            ///< Constraint-blind push stage, then epsilon-tolerant pull stage.
    Cdp,            ///< Feasibility-first dominance-style rule.
    Sr,             ///< Stochastic ranking: objective-only comparison with probability p_f.
    StaticEpsilon,  ///< Epsilon-tolerant rule on a fixed decaying schedule.
};

std::optional<ConstraintHandler> handler_from_name(const std::string& name);
std::string handler_name(ConstraintHandler handler);

/// Constraint-blind replacement: the child wins iff its Tchebycheff value is
/// less than or equal to the incumbent's.
bool push_replace(const Individual& incumbent, const Individual& child, const WeightVector& weight,
                  const ObjectiveVector& ideal);

/// Epsilon-tolerant replacement. With violations phi_c (child) and phi_i
/// (incumbent): when both are within epsilon the Tchebycheff values decide
/// (child wins ties); when the violations are exactly equal the Tchebycheff
/// values decide; otherwise the strictly smaller violation wins.
bool pull_replace(const Individual& incumbent, const Individual& child, const WeightVector& weight,
                  const ObjectiveVector& ideal, double epsilon);

/// Feasibility-first replacement: a feasible solution beats an infeasible
/// one, smaller violation wins between infeasible ones (Tchebycheff decides
/// exact violation ties), and the Tchebycheff values decide between feasible
/// ones. Identical to pull_replace with epsilon = 0.
bool cdp_replace(const Individual& incumbent, const Individual& child, const WeightVector& weight,
                 const ObjectiveVector& ideal);

/// Stochastic-ranking replacement: with probability p_f the comparison is
/// objective-only (push rule), otherwise feasibility-first (cdp rule).
/// Consumes exactly one uniform() draw per call.
bool sr_replace(const Individual& incumbent, const Individual& child, const WeightVector& weight,
                const ObjectiveVector& ideal, double p_f, Rng& rng);

} // namespace pps

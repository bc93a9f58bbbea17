#pragma once

#include <vector>

#include "pps/errors.hpp"

namespace pps {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Per-variable box bounds.
struct Bounds {
    double lower = 0.0;
    double upper = 1.0;
};

/// One evaluated solution. The objectives and the aggregate constraint
/// violation always correspond to x under the problem that produced it;
/// treat an Individual as immutable once built and replace it wholesale.
struct Individual {
    DecisionVector x;
    ObjectiveVector f;
    double violation = 0.0;

    bool feasible() const { return violation == 0.0; }
};

/// Component-wise population minimum and maximum of the objectives,
/// recorded once per generation for stage-switch detection.
struct IdealNadirPair {
    ObjectiveVector ideal;
    ObjectiveVector nadir;
};

/// Aggregate constraint violation: sum of |min(v, 0)| over all inequality
/// values (satisfied when >= 0) and transformed equality values. Returns
/// exactly 0 iff every constraint is satisfied.
///
/// Throws EvaluationError if any entry is NaN or infinite.
double overall_violation(const std::vector<double>& inequalities,
                         const std::vector<double>& transformed_equalities);

/// Rewrites an equality constraint h(x) = 0 as the inequality
/// eq_tolerance - |h| >= 0. Throws ConfigError when eq_tolerance <= 0.
double transform_equality(double h, double eq_tolerance);

/// Strict Pareto dominance on raw objectives (violations are ignored):
/// a <= b in every component and a < b in at least one.
/// Throws ContractError on length mismatch.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

inline bool dominates(const Individual& a, const Individual& b) { return dominates(a.f, b.f); }

} // namespace pps

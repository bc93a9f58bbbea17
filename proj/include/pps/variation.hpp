#pragma once

#include <optional>
#include <vector>

#include "pps/core.hpp"
#include "pps/rng.hpp"

namespace pps {

/// Differential-evolution and polynomial-mutation parameters.
struct VariationConfig {
    double de_f = 0.5;              ///< DE scale factor F.
    double de_cr = 1.0;             ///< DE crossover rate CR in [0, 1].
    std::optional<double> pm;       ///< Per-dimension mutation rate; 1/n when unset.
    double eta_m = 20.0;            ///< Polynomial-mutation distribution index.

    double resolved_pm(int dimension) const { return pm.value_or(1.0 / static_cast<double>(dimension)); }
};

/// DE trial vector with the incumbent as base: per dimension either
/// base_d + F * (r1_d - r2_d) or base_d, via binomial crossover with one
/// always-inherited dimension. Components beyond a bound are repaired to the
/// midpoint between the base value and that bound.
///
/// Rng draws, in order: j_rand = uniform_int(n), then one uniform() gate per
/// dimension d = 0..n-1 (dimension d inherits the trial value when the gate
/// is < CR or d == j_rand).
DecisionVector de_offspring(const DecisionVector& base, const DecisionVector& r1,
                            const DecisionVector& r2, const std::vector<Bounds>& bounds,
                            const VariationConfig& cfg, Rng& rng);

/// Polynomial mutation. Each dimension is mutated independently with
/// probability cfg.pm; the perturbation is clamped to the bounds.
///
/// Rng draws, in order per dimension: one uniform() gate, then one uniform()
/// perturbation draw when the gate fires.
DecisionVector polynomial_mutation(const DecisionVector& x, const std::vector<Bounds>& bounds,
                                   const VariationConfig& cfg, Rng& rng);

/// Raw polynomial-mutation offset for a uniform draw u in [0, 1): the mutated
/// value is y + offset * (upper - lower). Exposed separately so the kernel's
/// boundary behaviour is directly checkable (u = 0.5 maps to offset 0).
double polynomial_offset(double u, double y, double lower, double upper, double eta_m);

} // namespace pps

#include "pps/variation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pps {

namespace {

void check_lengths(std::size_t n, std::size_t nb, const char* who) {
    if (n != nb) throw ContractError(std::string(who) + ": vector/bounds length mismatch");
}

} // namespace

DecisionVector de_offspring(const DecisionVector& base, const DecisionVector& r1,
                            const DecisionVector& r2, const std::vector<Bounds>& bounds,
                            const VariationConfig& cfg, Rng& rng) {
    const std::size_t n = base.size();
    if (r1.size() != n || r2.size() != n) throw ContractError("de_offspring: parent length mismatch");
    check_lengths(n, bounds.size(), "de_offspring");
    if (cfg.de_cr < 0.0 || cfg.de_cr > 1.0)
        throw ConfigError("de_offspring: CR must lie in [0, 1]");

    DecisionVector child(n);
    const int j_rand = rng.uniform_int(static_cast<int>(n));
    for (std::size_t d = 0; d < n; ++d) {
        const bool take = rng.uniform() < cfg.de_cr || static_cast<int>(d) == j_rand;
        if (!take) {
            child[d] = base[d];
            continue;
        }
        double v = base[d] + cfg.de_f * (r1[d] - r2[d]);
        if (v < bounds[d].lower) v = 0.5 * (base[d] + bounds[d].lower);
        if (v > bounds[d].upper) v = 0.5 * (base[d] + bounds[d].upper);
        child[d] = v;
    }
    return child;
}

double polynomial_offset(double u, double y, double lower, double upper, double eta_m) {
    const double range = upper - lower;
    const double rel_lo = (y - lower) / range;  // distance to the lower bound, in [0, 1]
    const double rel_hi = (upper - y) / range;
    const double exp = 1.0 / (eta_m + 1.0);
    if (u <= 0.5) {
        const double xy = 1.0 - rel_lo;
        const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta_m + 1.0);
        return std::pow(val, exp) - 1.0;
    }
    const double xy = 1.0 - rel_hi;
    const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta_m + 1.0);
    return 1.0 - std::pow(val, exp);
}

DecisionVector polynomial_mutation(const DecisionVector& x, const std::vector<Bounds>& bounds,
                                   const VariationConfig& cfg, Rng& rng) {
    check_lengths(x.size(), bounds.size(), "polynomial_mutation");
    const double pm = cfg.resolved_pm(static_cast<int>(x.size()));
    if (pm < 0.0 || pm > 1.0) throw ConfigError("polynomial_mutation: pm must lie in [0, 1]");
    if (!(cfg.eta_m > 0.0)) throw ConfigError("polynomial_mutation: eta_m must be positive");

    DecisionVector y = x;
    for (std::size_t d = 0; d < y.size(); ++d) {
        if (rng.uniform() >= pm) continue;
        const double u = rng.uniform();
        const double lo = bounds[d].lower;
        const double hi = bounds[d].upper;
        const double value = y[d] + polynomial_offset(u, y[d], lo, hi, cfg.eta_m) * (hi - lo);
        y[d] = std::clamp(value, lo, hi);
    }
    return y;
}

} // namespace pps

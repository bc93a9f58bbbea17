// Slow, obviously-correct reference implementations used to cross-check the
// production metrics and statistics code. Everything here trades speed for
// directness: quadratic loops, Monte Carlo estimation, full permutation
// enumeration. Nothing in this header is used outside the test binaries.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "pps/core.hpp"
#include "pps/rng.hpp"

namespace oracle {

/// Inverted generational distance by the definition: for every reference
/// point, scan all approximation points for the nearest one.
inline double igd(const std::vector<pps::ObjectiveVector>& front,
                  const std::vector<pps::ObjectiveVector>& approximation) {
    double total = 0.0;
    for (const auto& ref : front) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& point : approximation) {
            double sq = 0.0;
            for (std::size_t j = 0; j < ref.size(); ++j) {
                const double d = ref[j] - point[j];
                sq += d * d;
            }
            best = std::min(best, sq);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(front.size());
}

struct MonteCarloHv {
    double estimate;
    double standard_error;
};

/// Monte Carlo hypervolume: sample the box [ideal, reference] uniformly and
/// count samples dominated by at least one point. The box ideal is the
/// component-wise minimum of the point set, so every dominated sample lies
/// inside the box.
inline MonteCarloHv mc_hypervolume(const std::vector<pps::ObjectiveVector>& points,
                                   const pps::ObjectiveVector& reference, int samples,
                                   std::uint64_t seed) {
    const std::size_t m = reference.size();
    pps::ObjectiveVector lo(reference);
    for (const auto& p : points)
        for (std::size_t j = 0; j < m; ++j) lo[j] = std::min(lo[j], p[j]);

    double box = 1.0;
    for (std::size_t j = 0; j < m; ++j) box *= reference[j] - lo[j];
    if (box <= 0.0) return {0.0, 0.0};

    pps::Rng rng(seed);
    int hits = 0;
    pps::ObjectiveVector sample(m);
    for (int s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < m; ++j) sample[j] = rng.uniform(lo[j], reference[j]);
        for (const auto& p : points) {
            bool dominated = true;
            for (std::size_t j = 0; j < m; ++j)
                if (p[j] > sample[j]) {
                    dominated = false;
                    break;
                }
            if (dominated) {
                ++hits;
                break;
            }
        }
    }
    const double rate = static_cast<double>(hits) / samples;
    const double se = std::sqrt(std::max(rate * (1.0 - rate), 0.0) / samples) * box;
    return {rate * box, se};
}

/// Exact two-sided rank-sum p-value by enumerating every assignment of pooled
/// ranks to the first sample. Feasible only for tiny samples; the doubled
/// single-tail probability is capped at 1.
inline double exact_rank_sum_p(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::size_t n = pooled.size();
    const std::size_t na = a.size();

    // Midranks over the pooled sample, ties averaged.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        const double rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }

    double observed = 0.0;
    for (std::size_t i = 0; i < na; ++i) observed += ranks[i];

    // Enumerate all C(n, na) subsets via bitmask (n is at most ~16 here).
    long total = 0, le = 0, ge = 0;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != na) continue;
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sum += ranks[i];
        ++total;
        if (sum <= observed + 1e-12) ++le;
        if (sum >= observed - 1e-12) ++ge;
    }
    const double tail = static_cast<double>(std::min(le, ge)) / static_cast<double>(total);
    return std::min(1.0, 2.0 * tail);
}

} // namespace oracle

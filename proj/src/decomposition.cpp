#include "pps/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace pps {

namespace {

// Number of lattice points at resolution h in m objectives: C(h + m - 1, m - 1).
// Saturates instead of overflowing; m stays small in practice.
std::uint64_t lattice_size(int h, int m) {
    std::uint64_t result = 1;
    for (int i = 1; i <= m - 1; ++i) {
        result = result * static_cast<std::uint64_t>(h + i) / static_cast<std::uint64_t>(i);
        if (result > (std::uint64_t{1} << 62)) return std::uint64_t{1} << 62;
    }
    return result;
}

void enumerate(int remaining, int position, int h, std::vector<int>& parts,
               std::vector<WeightVector>& out) {
    if (position == static_cast<int>(parts.size()) - 1) {
        parts[static_cast<std::size_t>(position)] = remaining;
        WeightVector w(parts.size());
        for (std::size_t j = 0; j < parts.size(); ++j)
            w[j] = static_cast<double>(parts[j]) / static_cast<double>(h);
        out.push_back(std::move(w));
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        parts[static_cast<std::size_t>(position)] = v;
        enumerate(remaining - v, position + 1, h, parts, out);
    }
}

} // namespace

std::vector<WeightVector> generate_weights(int objectives, int count) {
    if (objectives < 2) throw ConfigError("generate_weights: need at least 2 objectives");
    if (count < objectives)
        throw ConfigError("generate_weights: count " + std::to_string(count) +
                          " below objective count " + std::to_string(objectives));

    int h = 1;
    while (lattice_size(h, objectives) < static_cast<std::uint64_t>(count)) ++h;

    std::vector<WeightVector> weights;
    weights.reserve(static_cast<std::size_t>(lattice_size(h, objectives)));
    std::vector<int> parts(static_cast<std::size_t>(objectives), 0);
    enumerate(h, 0, h, parts, weights);
    // Ascending enumeration of the first components is already lexicographic;
    // drop trailing vectors when the lattice oversamples the request.
    weights.resize(static_cast<std::size_t>(count));
    return weights;
}

std::vector<std::vector<int>> build_neighborhoods(const std::vector<WeightVector>& weights, int t) {
    const int n = static_cast<int>(weights.size());
    if (t < 1 || t > n)
        throw ConfigError("build_neighborhoods: neighborhood size " + std::to_string(t) +
                          " outside [1, " + std::to_string(n) + "]");

    std::vector<std::vector<int>> hoods(static_cast<std::size_t>(n));
    std::vector<std::pair<double, int>> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double d2 = 0.0;
            for (std::size_t c = 0; c < weights[static_cast<std::size_t>(i)].size(); ++c) {
                const double diff = weights[static_cast<std::size_t>(i)][c] - weights[static_cast<std::size_t>(j)][c];
                d2 += diff * diff;
            }
            order[static_cast<std::size_t>(j)] = {d2, j};
        }
        std::sort(order.begin(), order.end());
        hoods[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(t));
        for (int k = 0; k < t; ++k) hoods[static_cast<std::size_t>(i)].push_back(order[static_cast<std::size_t>(k)].second);
    }
    return hoods;
}

double tchebycheff(const ObjectiveVector& f, const WeightVector& weight,
                   const ObjectiveVector& ideal) {
    if (f.size() != weight.size() || f.size() != ideal.size())
        throw ContractError("tchebycheff: mismatched lengths");
    double value = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double w = std::max(weight[j], kWeightFloor);
        value = std::max(value, std::fabs(f[j] - ideal[j]) / w);
    }
    return value;
}

} // namespace pps

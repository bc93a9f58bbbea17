#pragma once

#include <vector>

#include "pps/core.hpp"

namespace pps {

using WeightVector = std::vector<double>;

/// Floor applied to weight components inside the Tchebycheff scalarization
/// so zero-weight coordinates stay bounded.
inline constexpr double kWeightFloor = 1e-6;

/// Simplex-lattice weight vectors: the smallest lattice resolution H with
/// C(H + m - 1, m - 1) >= count is enumerated in lexicographic order and
/// truncated to the first `count` vectors. For two objectives this yields
/// exactly ((i) / (count - 1), 1 - (i) / (count - 1)) for i = 0..count-1.
/// Each vector is non-negative and sums to 1. Requires count >= objectives >= 2
/// (ConfigError otherwise).
std::vector<WeightVector> generate_weights(int objectives, int count);

/// For each weight vector, the indices of its t nearest weight vectors by
/// Euclidean distance, self included, distance ties broken by the smaller
/// index. Requires 1 <= t <= weights.size() (ConfigError otherwise).
std::vector<std::vector<int>> build_neighborhoods(const std::vector<WeightVector>& weights, int t);

/// Weighted Tchebycheff scalarization relative to the ideal point:
/// max_j |f_j - ideal_j| / max(weight_j, kWeightFloor).
/// Throws ContractError on length mismatch.
double tchebycheff(const ObjectiveVector& f, const WeightVector& weight,
                   const ObjectiveVector& ideal);

} // namespace pps

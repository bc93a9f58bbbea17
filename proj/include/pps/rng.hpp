#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace pps {

/// Deterministic random stream backed by a 64-bit Mersenne twister.
///
/// Every stochastic step of a run draws from a single Rng instance in a
/// fixed, documented order, so one seed pins the whole trajectory and two
/// runs with equal seed and config are bit-identical.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    /// Uniform integer in [0, n). Requires n > 0.
    int uniform_int(int n) {
        // Multiply-shift bounding; bias is O(n / 2^64) and irrelevant here.
        return static_cast<int>(
            (static_cast<unsigned __int128>(gen_()) * static_cast<std::uint64_t>(n)) >> 64);
    }

    /// Fisher-Yates permutation of {0, ..., n-1}; consumes n-1 integer draws.
    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform_int(i + 1))]);
        return p;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace pps

#include "pps/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pps {

namespace {

// Exact area for points already strictly inside the reference box.
double hv2(std::vector<ObjectiveVector> pts, double z1, double z2) {
    std::sort(pts.begin(), pts.end());
    // Keep the non-dominated staircase: f1 strictly increasing, f2 strictly
    // decreasing. Each step then covers the strip up to its successor.
    std::vector<std::pair<double, double>> stair;
    for (const auto& p : pts)
        if (stair.empty() || p[1] < stair.back().second) stair.emplace_back(p[0], p[1]);
    double volume = 0.0;
    for (std::size_t i = 0; i < stair.size(); ++i) {
        const double right = i + 1 < stair.size() ? stair[i + 1].first : z1;
        volume += (right - stair[i].first) * (z2 - stair[i].second);
    }
    return volume;
}

double hv2_from(const std::vector<ObjectiveVector>& pts, double z1, double z2) {
    std::vector<ObjectiveVector> kept;
    kept.reserve(pts.size());
    for (const auto& p : pts)
        if (p[0] < z1 && p[1] < z2) kept.push_back({p[0], p[1]});
    return hv2(std::move(kept), z1, z2);
}

} // namespace

double igd(const ReferenceFront& front, const std::vector<ObjectiveVector>& approximation) {
    if (front.points.empty()) throw ContractError("igd: empty reference front");
    if (approximation.empty())
        throw UndefinedMetricError("igd: undefined for an empty approximation set");
    const std::size_t m = front.points.front().size();
    for (const auto& a : approximation)
        if (a.size() != m) throw ContractError("igd: dimension mismatch");

    double total = 0.0;
    for (const auto& ref : front.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : approximation) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double diff = ref[j] - a[j];
                d2 += diff * diff;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(front.points.size());
}

double hypervolume(const std::vector<ObjectiveVector>& approximation,
                   const ObjectiveVector& reference_point) {
    const std::size_t m = reference_point.size();
    for (const auto& a : approximation)
        if (a.size() != m) throw ContractError("hypervolume: dimension mismatch");

    if (m == 2) return hv2_from(approximation, reference_point[0], reference_point[1]);

    if (m == 3) {
        std::vector<ObjectiveVector> kept;
        for (const auto& p : approximation)
            if (p[0] < reference_point[0] && p[1] < reference_point[1] && p[2] < reference_point[2])
                kept.push_back(p);
        if (kept.empty()) return 0.0;
        // Sweep f3 upward; between consecutive cut heights the covered area is
        // the 2-d hypervolume of everything at or below the slice floor.
        std::sort(kept.begin(), kept.end(),
                  [](const ObjectiveVector& a, const ObjectiveVector& b) { return a[2] < b[2]; });
        std::vector<double> cuts;
        for (const auto& p : kept)
            if (cuts.empty() || p[2] > cuts.back()) cuts.push_back(p[2]);
        cuts.push_back(reference_point[2]);

        double volume = 0.0;
        std::vector<ObjectiveVector> active;
        std::size_t next = 0;
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            while (next < kept.size() && kept[next][2] <= cuts[c]) {
                active.push_back({kept[next][0], kept[next][1]});
                ++next;
            }
            volume += hv2(active, reference_point[0], reference_point[1]) * (cuts[c + 1] - cuts[c]);
        }
        return volume;
    }

    throw UnsupportedError("hypervolume: implemented for 2 or 3 objectives, got " +
                           std::to_string(m));
}

ObjectiveVector hypervolume_reference(const ReferenceFront& front, std::vector<int>* degenerate) {
    if (front.points.empty()) throw ContractError("hypervolume_reference: empty front");
    const std::size_t m = front.points.front().size();
    ObjectiveVector ideal(m, std::numeric_limits<double>::infinity());
    ObjectiveVector nadir(m, -std::numeric_limits<double>::infinity());
    for (const auto& p : front.points) {
        if (p.size() != m) throw ContractError("hypervolume_reference: ragged front");
        for (std::size_t j = 0; j < m; ++j) {
            ideal[j] = std::min(ideal[j], p[j]);
            nadir[j] = std::max(nadir[j], p[j]);
        }
    }
    ObjectiveVector ref(m);
    for (std::size_t j = 0; j < m; ++j) {
        double span = nadir[j] - ideal[j];
        if (span == 0.0) {
            span = 1e-6;
            if (degenerate) degenerate->push_back(static_cast<int>(j));
        }
        ref[j] = ideal[j] + 1.2 * span;
    }
    return ref;
}

} // namespace pps

#pragma once

#include <vector>

#include "pps/core.hpp"
#include "pps/problems.hpp"

namespace pps {

/// Inverted generational distance: the mean, over the reference front, of
/// the Euclidean distance to the nearest approximation point. Lower is
/// better. Throws UndefinedMetricError when the approximation is empty and
/// ContractError when the front is empty or dimensions disagree.
double igd(const ReferenceFront& front, const std::vector<ObjectiveVector>& approximation);

/// Exact hypervolume dominated by the approximation relative to a reference
/// point that every counted solution must strictly dominate; points not
/// strictly below the reference point in all coordinates contribute nothing.
/// Implemented for two objectives (staircase sweep) and three objectives
/// (sweep over axis-aligned slices); other dimensions throw UnsupportedError.
double hypervolume(const std::vector<ObjectiveVector>& approximation,
                   const ObjectiveVector& reference_point);

/// Hypervolume reference point for a discretized true front: per coordinate
/// ideal + 1.2 * (nadir - ideal). A degenerate coordinate (nadir == ideal)
/// falls back to a span of 1e-6; such coordinates are appended to
/// `degenerate` when a sink is supplied, so callers can surface a warning.
ObjectiveVector hypervolume_reference(const ReferenceFront& front,
                                      std::vector<int>* degenerate = nullptr);

} // namespace pps

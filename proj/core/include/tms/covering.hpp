#pragma once

#include <vector>

#include "tms/space.hpp"

namespace tms {

struct CoveringResult {
    int count = 0;
    std::vector<int> centers;
};

/// Greedy farthest-point covering with open balls of the given radius.
/// Starts from point 0 and repeatedly adds the point farthest from the chosen
/// centers (lowest index on ties) until every point is strictly within the
/// radius of some center. The count is an upper bound on the minimal covering
/// number. Radius must be positive.
CoveringResult covering_number(const MetricSpace& space, const Scalar& radius);
CoveringResult covering_number(const TimedMetricSpace& space, const Scalar& radius);

}  // namespace tms

#include "tms/covering.hpp"

#include <stdexcept>

namespace tms {

CoveringResult covering_number(const MetricSpace& s, const Scalar& radius) {
    if (!(radius > Scalar(0))) throw std::invalid_argument("covering radius must be positive");
    const int n = s.size();
    CoveringResult result;
    result.centers.push_back(0);
    // nearest[i]: distance from i to the chosen centers
    std::vector<Scalar> nearest(n);
    for (int i = 0; i < n; ++i) nearest[i] = s.dist(0, i);
    for (;;) {
        int far = -1;
        for (int i = 0; i < n; ++i) {
            if (nearest[i] < radius) continue;  // open ball: covered iff d < r
            if (far < 0 || nearest[i] > nearest[far]) far = i;
        }
        if (far < 0) break;
        result.centers.push_back(far);
        for (int i = 0; i < n; ++i) nearest[i] = min(nearest[i], s.dist(far, i));
    }
    result.count = static_cast<int>(result.centers.size());
    return result;
}

CoveringResult covering_number(const TimedMetricSpace& s, const Scalar& radius) {
    return covering_number(s.metric(), radius);
}

}  // namespace tms

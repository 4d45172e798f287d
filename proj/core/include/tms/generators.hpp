#pragma once

#include <cstdint>

#include "tms/space.hpp"

namespace tms::gen {

/// Zigzag fixture: j+1 base points (k/j, 0) and j apex points at the
/// midpoints with height 1/(2j); distance |x - x'|, time the height. Each
/// apex is causally related exactly to its two neighbours, so chains sum to
/// |x - x'| and the space is causally null. `literal` places the apexes at
/// height 0 instead, which kills every causal relation.
TimedMetricSpace zigzag(int j, bool literal = false);

/// n equispaced points on [0, 1] with tau equal to the position: a monotone
/// causal chain realizing every distance, with J^+(p0) the whole space.
TimedMetricSpace chain(int n);

/// Grid on [0, 1] with tau identically zero (the zigzag limit).
TimedMetricSpace interval_grid(int segments);

/// k-point cycle with the given hop distance (path metric).
MetricSpace cycle(int k, const Scalar& hop);

/// Max-product of the time grid {0, 1/steps, ..., 1} with a base space.
TimedMetricSpace max_product_grid(int steps, const MetricSpace& base);

/// n distinct points with coordinates in {0, 1/q, ..., 1}^dim under the sup
/// norm; tau is the distance to point 0.
TimedMetricSpace random_box(int n, int dim, long denominator, std::uint64_t seed);

/// Same point cloud, but tau is the lower Lipschitz envelope of random
/// anchor values: tau(x) = min_j (t_j + d(x, j)). Produces varied causal
/// structures with exact equalities.
TimedMetricSpace random_lipschitz(int n, int dim, long denominator, std::uint64_t seed);

/// Random symmetric rational table repaired by min-plus closure into a
/// metric, with an envelope time function.
TimedMetricSpace random_metric(int n, long denominator, std::uint64_t seed);

}  // namespace tms::gen

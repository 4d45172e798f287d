#pragma once

#include <utility>
#include <vector>

#include "tms/space.hpp"

namespace tms {

struct HierarchyParams {
    int depth = 0;
    std::vector<int> level_sizes;       // N_1 .. N_m
    long max_addresses = 500000;        // refusal cap on the total index count
};

/// Depth: the smallest level whose greedy net is surjective on every space
/// (2^-i eventually drops below the smallest positive distance). Level
/// sizes: maxima of the per-space greedy covering numbers.
HierarchyParams default_hierarchy_params(const std::vector<const TimedMetricSpace*>& spaces,
                                         int max_depth = 16, long max_addresses = 500000);

/// Nested net index structure shared by a family of spaces.
///
/// Level i holds tuples (a_1, ..., a_i) with a_k ranging over 1..N_k; the
/// projection drops the last entry. Per space, level 1 selects the greedy
/// epsilon_1-net (padded by repetition up to N_1) and level i+1 refines a
/// parent with center c by the rule: entry b selects the b-th global
/// epsilon_{i+1}-net point y_b when d(y_b, c) < eps_i + eps_{i+1}, and
/// duplicates c otherwise. This keeps every selection within 2 eps_i of its
/// parent while the selected sets still cover at scale eps_{i+1}.
class NetHierarchy {
public:
    int depth() const { return depth_; }
    int space_count() const { return static_cast<int>(sel_.size()); }
    int level_size(int level) const { return sizes_[level - 1]; }
    long level_count(int level) const { return counts_[level - 1]; }
    /// 2^-level, exact.
    Scalar epsilon(int level) const;
    /// Parent address index at level-1; level >= 2.
    long parent(int level, long a) const { return a / sizes_[level - 1]; }
    /// Selected point index of space `s` at (level, address).
    int selection(int s, int level, long a) const { return sel_[s][level - 1][a]; }

    const Scalar& diameter_bound() const { return diam_bound_; }
    const Scalar& tau_bound() const { return tau_bound_; }

    /// Smallest level whose selected set contains every point of space `s`;
    /// -1 when none does within the depth.
    int surjective_depth(int s, const TimedMetricSpace& space) const;

    /// Covering at every level and nesting between consecutive levels,
    /// for every space.
    ValidationReport verify(const std::vector<const TimedMetricSpace*>& spaces) const;

private:
    friend NetHierarchy build_hierarchy(const std::vector<const TimedMetricSpace*>&,
                                        const HierarchyParams&);
    int depth_ = 0;
    std::vector<int> sizes_;
    std::vector<long> counts_;
    std::vector<std::vector<std::vector<int>>> sel_;  // [space][level-1][address]
    Scalar diam_bound_;
    Scalar tau_bound_;
};

/// Throws Refusal naming the space and level when a greedy cover exceeds the
/// requested level size, or when the address count exceeds the cap.
NetHierarchy build_hierarchy(const std::vector<const TimedMetricSpace*>& spaces,
                             const HierarchyParams& params);

/// First level-depth address whose selection is the given point; -1 if none.
long address_of_point(const NetHierarchy& h, int space, int point);

/// View of one space's embedding into the function space over the address
/// set: the coordinate at (level, a) is the distance to the selected point.
class FunctionEmbedding {
public:
    FunctionEmbedding(const TimedMetricSpace& space, const NetHierarchy& hierarchy,
                      int space_index);

    Scalar coord(int point, int level, long a) const;
    /// Sup over all shared coordinates, with |dtau| included when timed.
    Scalar sup_distance(int point, const FunctionEmbedding& other, int other_point,
                        bool timed) const;

    /// Level-1 coordinates within [0, D]; consecutive-level continuity
    /// |f(a) - f(parent a)| <= 2 eps_i; sup distances between rows never
    /// exceed d and reproduce d exactly at a surjective depth.
    ValidationReport verify() const;

    const TimedMetricSpace& space() const { return *space_; }
    int space_index() const { return index_; }

private:
    const TimedMetricSpace* space_;
    const NetHierarchy* hierarchy_;
    int index_;
};

FunctionEmbedding embed_in_F(const TimedMetricSpace& space, const NetHierarchy& hierarchy,
                             int space_index);

struct ConvergenceRow {
    int j = 0;               // position in the sequence
    Scalar hausdorff;        // timed sup-metric Hausdorff distance to the limit
    Scalar sup_tau_dev;      // sup over addresses of |tau_j - tau_limit|
    Scalar sup_dist_dev;     // double sup over address pairs of |d_j - d_limit|
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    int depth = 0;
    Scalar resolution;       // eps_depth
    Scalar diameter_bound;
    Scalar tau_bound;
};

/// Hausdorff and address-level deviations of each space against a candidate
/// limit. The hierarchy must have been built over spaces + limit, with the
/// limit last. Explicit bounds, when given, are checked against every space
/// (refusal with a witness otherwise).
ConvergenceReport convergence_report(const NetHierarchy& h,
                                     const std::vector<const TimedMetricSpace*>& spaces,
                                     const TimedMetricSpace& limit,
                                     const Scalar* diameter_cap = nullptr,
                                     const Scalar* tau_cap = nullptr);

/// Convenience: builds the default hierarchy (optionally depth-capped) and
/// reports against it.
struct ConvergenceRun {
    NetHierarchy hierarchy;
    ConvergenceReport report;
};
ConvergenceRun run_convergence(const std::vector<const TimedMetricSpace*>& spaces,
                               const TimedMetricSpace& limit, int depth_override = 0);

struct StabilityItem1Row {
    int j = 0;
    int p_limit = -1, q_limit = -1;  // matched限 limit points
    Scalar defect;                   // |(tau(p) - tau(q)) - d(p, q)| in the limit
    Scalar radius;                   // reported Hausdorff value for this j
    bool within = false;             // defect <= c * radius
};

struct StabilityItem2 {
    long addr_a = -1, addr_b = -1;
    Scalar gap;              // |dtau - d| of the limit pair
    int threshold_j = -1;    // first j with deviation below gap / 2
    bool persistent = false; // non-related for every j past the threshold
    int first_violation_j = -1;
};

struct StabilityReport {
    Scalar c;  // recorded constant for item 1 (4: one tau hop each side plus 2r for d)
    std::vector<StabilityItem1Row> item1;
    std::vector<StabilityItem2> item2;
};

/// Item 1: for each supplied causally related pair (p_j, q_j), matches limit
/// points within the reported Hausdorff radius and bounds the causal defect
/// of the matched pair by c times that radius. Item 2: for each supplied
/// non-related pair of limit addresses, finds the first j whose address
/// deviation (sup tau deviation + sup distance deviation) drops below half
/// the causal gap and certifies non-relatedness for every later j.
/// Refuses when some reported Hausdorff value exceeds delta.
StabilityReport causal_stability_check(
    const NetHierarchy& h, const std::vector<const TimedMetricSpace*>& spaces,
    const TimedMetricSpace& limit, const ConvergenceReport& report,
    const std::vector<std::pair<int, int>>& related_pairs,   // (p_j, q_j) per space j
    const std::vector<std::pair<long, long>>& limit_address_pairs,
    const Scalar& delta);

}  // namespace tms

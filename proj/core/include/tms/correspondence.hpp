#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tms/space.hpp"

namespace tms {

/// Relation between the index sets of two spaces that covers both sides.
/// Pairs are kept sorted and deduplicated; totality is checked on demand so
/// partial relations can be built and reported on.
class Correspondence {
public:
    Correspondence(int nx, int ny, std::vector<std::pair<int, int>> pairs);

    static Correspondence identity(int n);
    static Correspondence full(int nx, int ny);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    bool contains(int i, int j) const;

    /// Every index of X and of Y appears in some pair.
    bool total() const;
    /// First index of X (side 0) or Y (side 1) not covered; nullopt if total.
    std::optional<std::pair<int, int>> uncovered() const;

    Correspondence transpose() const;

    friend bool operator==(const Correspondence& a, const Correspondence& b) {
        return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.pairs_ == b.pairs_;
    }

private:
    int nx_;
    int ny_;
    std::vector<std::pair<int, int>> pairs_;
};

/// Worst discrepancy |d_X(a,a') - d_Y(b,b')| over pairs of pairs.
/// Throws std::invalid_argument when the correspondence is not total.
Scalar distortion(const Correspondence& c, const TimedMetricSpace& x,
                  const TimedMetricSpace& y);

/// Worst |tau_X(a) - tau_Y(b)| over the pairs.
Scalar time_defect(const Correspondence& c, const TimedMetricSpace& x,
                   const TimedMetricSpace& y);

/// max(time_defect, distortion / 2): the quantity minimized by
/// tgh_lower_bound. A lower bound for the timed Gromov-Hausdorff distance
/// for every total correspondence.
Scalar correspondence_objective(const Correspondence& c, const TimedMetricSpace& x,
                                const TimedMetricSpace& y);

/// (i,k) included iff some j links (i,j) in `xy` and (j,k) in `yz`.
Correspondence compose(const Correspondence& xy, const Correspondence& yz);

/// Hausdorff distance between two nonempty index subsets of a common space:
/// max of the two one-sided farthest-nearest values. Attained exactly on
/// finite sets.
Scalar hausdorff_distance(std::span<const int> a, std::span<const int> b,
                          const MetricSpace& ambient);
Scalar hausdorff_distance(std::span<const int> a, std::span<const int> b,
                          const TimedMetricSpace& ambient);

struct ThresholdCorrespondence {
    std::optional<Correspondence> corr;  // set on success
    Scalar distortion;                   // < 2R on success
    int uncovered_side = -1;             // 0: a point of A uncovered, 1: of B
    int uncovered_index = -1;

    bool ok() const { return corr.has_value(); }
};

/// The pair set {(a,b): d(a,b) < R}. Succeeds iff it is a correspondence,
/// which happens exactly when the Hausdorff distance between A and B is
/// below R; on failure reports an uncovered witness.
ThresholdCorrespondence threshold_correspondence(std::span<const int> a,
                                                 std::span<const int> b,
                                                 const MetricSpace& ambient,
                                                 const Scalar& radius);

enum class LowerBoundMode { Exhaustive, LocalSearch };

struct SearchOptions {
    /// Exhaustive correspondence search refuses above this many cells (n*m).
    int max_exhaustive_cells = 30;
    /// Ordering enumeration (upper bounds) refuses above this many cells.
    int max_enumerate_cells = 16;
    /// Local search restarts beyond the deterministic greedy start.
    int restarts = 8;
    std::uint64_t seed = 0;
};

struct LowerBound {
    Scalar value;
    Correspondence witness;
    bool exact;  // true when the search space was exhausted
};

/// Best lower bound min over correspondences of max(time_defect, dist/2).
/// Exhaustive mode enumerates minimal correspondences (unions of a function
/// graph X->Y and one Y->X); both objective terms are monotone under adding
/// pairs, so the minimum over minimal correspondences is the global minimum.
/// Local search starts from a greedy profile matching and improves by
/// single-pair reassignment, with seeded restarts; any correspondence still
/// yields a sound bound.
LowerBound tgh_lower_bound(const TimedMetricSpace& x, const TimedMetricSpace& y,
                           LowerBoundMode mode, const SearchOptions& opts = {});

}  // namespace tms

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tms/correspondence.hpp"
#include "tms/matrix.hpp"
#include "tms/space.hpp"

namespace tms {

/// Coordinate embedding of a finite space into a sup-metric coordinate space:
/// column l holds the distance to the l-th point of the ordering, and a timed
/// embedding prepends tau as column 0. When the ordering hits every point the
/// map preserves distances exactly.
class FrechetEmbedding {
public:
    FrechetEmbedding(std::vector<int> ordering, bool timed, Matrix<Scalar> rows);

    int point_count() const { return static_cast<int>(rows_.rows()); }
    int dim() const { return static_cast<int>(rows_.cols()); }
    bool timed() const { return timed_; }
    const std::vector<int>& ordering() const { return ordering_; }
    const Scalar& coord(int point, int k) const { return rows_(point, k); }
    const Matrix<Scalar>& rows() const { return rows_; }

    /// Sup-metric distance between the image of `i` here and the image of
    /// `j` in `other`; both embeddings must have the same dimension.
    Scalar sup_distance(int i, const FrechetEmbedding& other, int j) const;

    /// Whether pairwise sup distances reproduce the space's distances
    /// exactly (or within tolerance in float mode).
    bool distance_preserving(const TimedMetricSpace& space,
                             std::pair<int, int>* witness = nullptr) const;
    /// Timed embeddings only: column 0 equals tau.
    bool time_preserving(const TimedMetricSpace& space, int* witness = nullptr) const;

private:
    std::vector<int> ordering_;
    bool timed_;
    Matrix<Scalar> rows_;
};

/// Builds the embedding x -> (d(ordering[0], x), d(ordering[1], x), ...),
/// with tau prepended when timed. Empty orderings and out-of-range indices
/// are rejected.
FrechetEmbedding frechet_map(const TimedMetricSpace& space, std::vector<int> ordering,
                             bool timed);

/// Hausdorff distance between the two image sets in the shared sup-metric
/// coordinate space. Dimensions must agree.
Scalar sup_hausdorff(const FrechetEmbedding& a, const FrechetEmbedding& b);

struct Interleaving {
    FrechetEmbedding x;
    FrechetEmbedding y;
    Scalar achieved;  // sup_hausdorff of the pair
};

/// Interleaved timed Frechet pair driven by a correspondence: positions
/// alternate the points of X with partners of Y's points and vice versa, so
/// aligned coordinates compare corresponding points. The achieved Hausdorff
/// distance is at most max(time_defect, distortion) of the correspondence
/// and is an upper bound on the timed Gromov-Hausdorff distance.
/// Partners are chosen minimizing |dtau|, then lowest index.
Interleaving interleave(const Correspondence& c, const TimedMetricSpace& x,
                        const TimedMetricSpace& y);

enum class UpperBoundMode { FromCorrespondence, EnumerateOrderings };

struct UpperBound {
    Scalar value;
    FrechetEmbedding witness_x;
    FrechetEmbedding witness_y;
};

/// Smallest achieved sup-Hausdorff distance over candidate embedding pairs.
/// FromCorrespondence interleaves the best correspondence found by
/// tgh_lower_bound (exhaustive within the cap, local search beyond it).
/// EnumerateOrderings minimizes over all minimal column sets -- every
/// ordering pair of length up to 2*max(n,m) reduces to one of these -- and
/// refuses above the documented cell cap.
UpperBound tgh_upper_bound(const TimedMetricSpace& x, const TimedMetricSpace& y,
                           UpperBoundMode mode, const SearchOptions& opts = {});

/// Split of a timed distance-preserving embedding into (tau, zeta) with the
/// checks of the product decomposition: zeta is 1-Lipschitz everywhere and
/// preserves the distance of every non causally related pair.
struct ProductDecomposition {
    std::vector<Scalar> time_part;
    Matrix<Scalar> space_part;
    ValidationReport report;
};

/// Throws std::invalid_argument naming a witnessing pair when the embedding
/// is not timed or not distance preserving.
ProductDecomposition decompose_product_map(const FrechetEmbedding& embedding,
                                           const TimedMetricSpace& space);

}  // namespace tms

#pragma once

#include <utility>
#include <vector>

#include "tms/correspondence.hpp"
#include "tms/frechet.hpp"
#include "tms/space.hpp"

namespace tms {

/// Two sup-metric ambients glued along the middle space.
///
/// The left ambient holds the images of X1 and X2 under one embedding pair,
/// the right ambient the images of X2 and X3 under another. Two metrics are
/// carried:
///
///  - the slice metric d_Z on the union of the space factors, whose cross
///    distances lift both sides to time coordinate zero:
///      min over x in X2 of
///        max(tau2(x), d12(z, xi2(x))) + max(tau2(x), d23(chi2(x), z')),
///    quotiented by its zero-distance pairs (the copies of X2 points with
///    tau2 = 0);
///  - the glued product metric on (time, point) pairs, whose cross distances
///    lift at the points' own times. The X2 copies are identified at their
///    own time coordinates, so the two images of every X2 point coincide.
///
/// The slice metric satisfies the metric axioms; the product metric is the
/// one under which the composite images of X1 and X3 stay within the sum of
/// the two Hausdorff bounds.
class GluedSpace {
public:
    struct Node {
        int side;  // 0 = left ambient, 1 = right ambient
        int id;
    };

    int left_count() const { return static_cast<int>(left_rows_.rows()); }
    int right_count() const { return static_cast<int>(right_rows_.rows()); }

    Node x1_node(int i) const { return {0, x1_to_left_[i]}; }
    Node x2_left_node(int x) const { return {0, x2_to_left_[x]}; }
    Node x2_right_node(int x) const { return {1, x2_to_right_[x]}; }
    Node x3_node(int k) const { return {1, x3_to_right_[k]}; }

    /// Sup-metric distance inside one ambient's space factor.
    Scalar side_distance(int side, int a, int b) const;
    /// Slice cross distance (time-zero lift) between a left and a right node.
    Scalar cross_distance(int left, int right) const { return cross_(left, right); }
    Scalar slice_distance(Node a, Node b) const;

    /// Glued product metric between lifted points (t, node).
    Scalar product_distance(const Scalar& ta, Node a, const Scalar& tb, Node b) const;

    /// X2 indices whose two copies sit at slice distance zero and are
    /// therefore identified in the quotient.
    const std::vector<int>& identified_x2() const { return identified_x2_; }

    /// The slice metric as a metric space over the quotient classes.
    const MetricSpace& quotient() const { return quotient_; }
    /// Quotient class of a node.
    int quotient_class(Node n) const;

    /// Hausdorff distance between the composite images of X1 and X3 under
    /// the glued product metric; the glued upper bound for d(X1, X3).
    Scalar psi_hausdorff() const;

    /// Metric axioms for both metrics, the restriction identities, the
    /// consistency of merged copies and the preservation checks for the
    /// composite maps.
    ValidationReport verify() const;

private:
    friend GluedSpace glue(const TimedMetricSpace&, const TimedMetricSpace&,
                           const TimedMetricSpace&, const FrechetEmbedding&,
                           const FrechetEmbedding&, const FrechetEmbedding&,
                           const FrechetEmbedding&);

    GluedSpace() : quotient_({"?"}, Matrix<Scalar>(1, 1, Scalar(0))) {}

    std::vector<TimedMetricSpace> spaces_;  // copies of X1, X2, X3

    Matrix<Scalar> left_rows_, right_rows_;  // deduplicated space-factor rows
    std::vector<int> x1_to_left_, x2_to_left_, x2_to_right_, x3_to_right_;
    Matrix<Scalar> dl_, dr_, cross_;
    std::vector<int> identified_x2_;
    std::vector<int> node_class_;  // quotient class per node (left then right)
    MetricSpace quotient_;
};

GluedSpace glue(const TimedMetricSpace& x1, const TimedMetricSpace& x2,
                const TimedMetricSpace& x3, const FrechetEmbedding& e1,
                const FrechetEmbedding& e2, const FrechetEmbedding& f2,
                const FrechetEmbedding& f3);

struct TriangleReport {
    Scalar u12, u23, u13;
    Scalar u13_direct;  // plain upper bound between X1 and X3, for comparison
    Scalar slack;
    bool holds = false;
    ValidationReport glued_checks;
};

/// Computes upper bounds for (X1, X2) and (X2, X3), glues the witness
/// embeddings and certifies u13 <= u12 + u23 + 2 * slack, where u13 is the
/// glued product Hausdorff bound. Slack is zero in exact mode. u13_direct
/// reports the ungated bound (zero when X1 = X3, whatever the middle space).
TriangleReport triangle_check(const TimedMetricSpace& x1, const TimedMetricSpace& x2,
                              const TimedMetricSpace& x3, const SearchOptions& opts = {});

}  // namespace tms

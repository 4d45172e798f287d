#pragma once

#include <vector>

#include "tms/causal.hpp"
#include "tms/matrix.hpp"
#include "tms/space.hpp"

namespace tms {

/// All-pairs null distance: the undirected causal graph carries an edge
/// between every causally related pair, weighted by |dtau| (which equals d on
/// such pairs), and dhat is the shortest-path distance. Pairs in different
/// components are genuinely infinite. Witness chains are reconstructed from
/// the stored predecessors.
class NullDistanceResult {
public:
    NullDistanceResult(Matrix<ExtScalar> dhat, Matrix<int> pred);

    int size() const { return static_cast<int>(pred_.rows()); }
    const ExtScalar& dhat(int i, int j) const { return dhat_(i, j); }
    const Matrix<ExtScalar>& matrix() const { return dhat_; }

    /// Shortest causal chain from i to j, empty when unreachable.
    std::vector<int> chain(int i, int j) const;

private:
    Matrix<ExtScalar> dhat_;
    Matrix<int> pred_;
};

NullDistanceResult null_distance(const TimedMetricSpace& space);

struct CausalNullCheck {
    bool causally_null = false;
    int witness_i = -1;  // first pair with dhat != d, -1 when none
    int witness_j = -1;
};

/// dhat equals d entrywise (exact in rational mode, within tolerance
/// otherwise).
CausalNullCheck is_causally_null(const TimedMetricSpace& space);

struct Components {
    int count = 0;
    std::vector<int> id;  // component id per point
};

/// Connected components of the causal graph; dhat is finite exactly within
/// a component.
Components chain_connectivity(const TimedMetricSpace& space);

/// (X, dhat, tau) when dhat is finite everywhere; throws Refusal naming a
/// disconnected witness pair otherwise. The result is a valid space, its
/// causal structure agrees with the input's, and null_distance applied again
/// returns dhat unchanged.
TimedMetricSpace null_completion(const TimedMetricSpace& space);

/// Finite sequence of points with consecutive members causally related,
/// orientations possibly alternating. Orientation per step is derived from
/// the space: +1 when the step moves to the causal future, -1 to the past,
/// 0 when the step repeats a point.
class CausalChain {
public:
    CausalChain(std::vector<int> indices, const TimedMetricSpace& space);

    const std::vector<int>& indices() const { return indices_; }
    const std::vector<int>& orientations() const { return orientations_; }
    bool monotone() const;

private:
    std::vector<int> indices_;
    std::vector<int> orientations_;
};

/// Monotone chains must realize the distance between their endpoints:
/// sum of step lengths = d(p0, pN) = |tau(pN) - tau(p0)|. A non-monotone
/// chain that realizes the distance between all of its points must separate
/// at flips: points strictly before an orientation flip are not causally
/// related to points strictly after it. Violations carry witnesses; a
/// non-monotone chain that is not a realizer is reported as no violation.
ValidationReport check_chain_realizer(const CausalChain& chain,
                                      const TimedMetricSpace& space);

}  // namespace tms

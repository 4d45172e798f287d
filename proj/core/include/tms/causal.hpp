#pragma once

#include <vector>

#include "tms/space.hpp"

namespace tms {

/// Causal structure of a timed-metric space as a boolean relation.
/// rel(i, j) holds iff j lies in the causal future of i, i.e.
/// tau(j) - tau(i) equals d(i, j) (up to the space tolerance in float mode).
class CausalRelation {
public:
    explicit CausalRelation(int n) : n_(n), rel_(static_cast<std::size_t>(n) * n, false) {}

    int size() const { return n_; }
    bool rel(int i, int j) const { return rel_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, bool v) { rel_[static_cast<std::size_t>(i) * n_ + j] = v; }

    /// j in J^+(i) or i in J^+(j).
    bool related(int i, int j) const { return rel(i, j) || rel(j, i); }

private:
    int n_;
    std::vector<bool> rel_;
};

/// Derives the causal relation of a valid space. Throws std::invalid_argument
/// when the space fails validation.
CausalRelation causal_matrix(const TimedMetricSpace& space);

/// Reflexivity, antisymmetry (off-diagonal) and transitivity of the boolean
/// relation. Empty report iff the relation is a partial order.
ValidationReport check_partial_order(const CausalRelation& rel);

}  // namespace tms

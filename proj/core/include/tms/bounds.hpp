#pragma once

#include "tms/correspondence.hpp"
#include "tms/frechet.hpp"

namespace tms {

/// Two-sided certificate for the timed Gromov-Hausdorff distance: a witness
/// correspondence for the lower bound and a witness embedding pair for the
/// upper bound. lower <= upper always; in exact mode upper <= 2 * lower when
/// the lower search was exhausted.
struct BoundCertificate {
    Scalar lower;
    Correspondence lower_witness;
    Scalar upper;
    FrechetEmbedding upper_witness_x;
    FrechetEmbedding upper_witness_y;
    bool exact;  // lower bound search space exhausted
};

struct CertifyOptions {
    bool exact = true;  // refuse rather than fall back when over the cap
    SearchOptions search;
};

/// Runs the lower and upper bound searches and packages the results.
/// Throws Refusal in exact mode when the size cap is exceeded.
BoundCertificate certify_bounds(const TimedMetricSpace& x, const TimedMetricSpace& y,
                                const CertifyOptions& opts = {});

/// max(|tau_max(X) - tau_max(Y)|, |diam(X) - diam(Y)| / 2): every
/// correspondence objective dominates this.
Scalar trivial_lower_bound(const TimedMetricSpace& x, const TimedMetricSpace& y);

}  // namespace tms

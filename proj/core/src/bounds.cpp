#include "tms/bounds.hpp"

#include <stdexcept>

#include "tms/errors.hpp"

namespace tms {

BoundCertificate certify_bounds(const TimedMetricSpace& x, const TimedMetricSpace& y,
                                const CertifyOptions& opts) {
    const long long cells = static_cast<long long>(x.size()) * y.size();
    LowerBoundMode mode = LowerBoundMode::Exhaustive;
    if (cells > opts.search.max_exhaustive_cells) {
        if (opts.exact)
            throw Refusal("exact certification refused: " + std::to_string(cells) +
                          " cells exceed the cap of " +
                          std::to_string(opts.search.max_exhaustive_cells) +
                          "; rerun without --exact");
        mode = LowerBoundMode::LocalSearch;
    }
    LowerBound lb = tgh_lower_bound(x, y, mode, opts.search);
    UpperBound ub = tgh_upper_bound(x, y, UpperBoundMode::FromCorrespondence, opts.search);
    if (ub.value < lb.value)
        throw std::logic_error("certificate sandwich violated: lower " + lb.value.str() +
                               " > upper " + ub.value.str());
    return {std::move(lb.value),      std::move(lb.witness), std::move(ub.value),
            std::move(ub.witness_x), std::move(ub.witness_y), lb.exact};
}

Scalar trivial_lower_bound(const TimedMetricSpace& x, const TimedMetricSpace& y) {
    return max(abs(x.tau_max() - y.tau_max()), abs(x.diam() - y.diam()) / Scalar(2));
}

}  // namespace tms

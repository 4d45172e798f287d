#include "tms/causal.hpp"

namespace tms {

CausalRelation causal_matrix(const TimedMetricSpace& s) {
    require_valid(s);
    const int n = s.size();
    CausalRelation rel(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rel.set(i, j, s.eq(s.tau(j) - s.tau(i), s.dist(i, j)));
    return rel;
}

ValidationReport check_partial_order(const CausalRelation& rel) {
    ValidationReport report;
    const int n = rel.size();
    for (int i = 0; i < n; ++i)
        if (!rel.rel(i, i)) report.add(Axiom::Reflexivity, {i});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel.rel(i, j) && rel.rel(j, i))
                report.add(Axiom::Antisymmetry, {i, j});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!rel.rel(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (rel.rel(j, k) && !rel.rel(i, k))
                    report.add(Axiom::Transitivity, {i, j, k});
        }
    return report;
}

}  // namespace tms

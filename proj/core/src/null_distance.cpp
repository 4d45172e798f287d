#include "tms/null_distance.hpp"

#include <algorithm>
#include <stdexcept>

#include "tms/errors.hpp"

namespace tms {

NullDistanceResult::NullDistanceResult(Matrix<ExtScalar> dhat, Matrix<int> pred)
    : dhat_(std::move(dhat)), pred_(std::move(pred)) {}

std::vector<int> NullDistanceResult::chain(int i, int j) const {
    if (dhat_(i, j).infinite()) return {};
    std::vector<int> chain{j};
    int cur = j;
    while (cur != i) {
        cur = pred_(i, cur);
        chain.push_back(cur);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

NullDistanceResult null_distance(const TimedMetricSpace& s) {
    const int n = s.size();
    CausalRelation rel = causal_matrix(s);
    Matrix<ExtScalar> dhat(n, n, ExtScalar::infinity());
    Matrix<int> pred(n, n, -1);

    // Dijkstra from each source over the undirected causal graph with
    // |dtau| edge weights. Quadratic selection; the graphs are small.
    std::vector<ExtScalar> dist(n);
    std::vector<bool> done(n);
    for (int src = 0; src < n; ++src) {
        for (int i = 0; i < n; ++i) {
            dist[i] = ExtScalar::infinity();
            done[i] = false;
        }
        dist[src] = ExtScalar(Scalar(0));
        pred(src, src) = src;
        for (;;) {
            int u = -1;
            for (int i = 0; i < n; ++i)
                if (!done[i] && !dist[i].infinite() && (u < 0 || dist[i] < dist[u])) u = i;
            if (u < 0) break;
            done[u] = true;
            for (int v = 0; v < n; ++v) {
                if (done[v] || v == u || !rel.related(u, v)) continue;
                ExtScalar cand = dist[u] + ExtScalar(abs(s.tau(u) - s.tau(v)));
                if (cand < dist[v]) {
                    dist[v] = cand;
                    pred(src, v) = u;
                }
            }
        }
        for (int i = 0; i < n; ++i) dhat(src, i) = dist[i];
    }
    return NullDistanceResult(std::move(dhat), std::move(pred));
}

CausalNullCheck is_causally_null(const TimedMetricSpace& s) {
    NullDistanceResult nd = null_distance(s);
    const int n = s.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const ExtScalar& v = nd.dhat(i, j);
            if (v.infinite() || !s.eq(v.finite(), s.dist(i, j))) return {false, i, j};
        }
    return {true, -1, -1};
}

Components chain_connectivity(const TimedMetricSpace& s) {
    const int n = s.size();
    CausalRelation rel = causal_matrix(s);
    Components comp;
    comp.id.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (comp.id[i] >= 0) continue;
        // breadth-first sweep
        std::vector<int> queue{i};
        comp.id[i] = comp.count;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int v = 0; v < n; ++v)
                if (comp.id[v] < 0 && v != u && rel.related(u, v)) {
                    comp.id[v] = comp.count;
                    queue.push_back(v);
                }
        }
        ++comp.count;
    }
    return comp;
}

TimedMetricSpace null_completion(const TimedMetricSpace& s) {
    NullDistanceResult nd = null_distance(s);
    const int n = s.size();
    Matrix<Scalar> dist(n, n, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const ExtScalar& v = nd.dhat(i, j);
            if (v.infinite())
                throw Refusal("null completion refused: points " + std::to_string(i) + " (" +
                              s.label(i) + ") and " + std::to_string(j) + " (" + s.label(j) +
                              ") lie in different causal components");
            dist(i, j) = v.finite();
        }
    TimedMetricSpace completed(
        MetricSpace(s.metric().labels(), std::move(dist), s.metric().policy()), s.tau());
    ValidationReport check = validate(completed);
    if (!check.ok())
        throw std::logic_error("null completion produced an invalid space: " + check.str());
    return completed;
}

CausalChain::CausalChain(std::vector<int> indices, const TimedMetricSpace& s)
    : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("empty chain");
    for (int idx : indices_)
        if (idx < 0 || idx >= s.size()) throw std::invalid_argument("chain index out of range");
    CausalRelation rel = causal_matrix(s);
    orientations_.reserve(indices_.size() - 1);
    for (std::size_t k = 1; k < indices_.size(); ++k) {
        int a = indices_[k - 1], b = indices_[k];
        if (a == b) {
            orientations_.push_back(0);
            continue;
        }
        if (rel.rel(a, b))
            orientations_.push_back(+1);  // b in the causal future of a
        else if (rel.rel(b, a))
            orientations_.push_back(-1);
        else
            throw std::invalid_argument("consecutive chain points " + std::to_string(a) +
                                        " and " + std::to_string(b) +
                                        " are not causally related");
    }
}

bool CausalChain::monotone() const {
    int sign = 0;
    for (int o : orientations_) {
        if (o == 0) continue;
        if (sign == 0)
            sign = o;
        else if (o != sign)
            return false;
    }
    return true;
}

ValidationReport check_chain_realizer(const CausalChain& chain, const TimedMetricSpace& s) {
    ValidationReport report;
    // Collapse repeated points; flat steps carry no length and no
    // orientation.
    std::vector<int> pts;
    std::vector<int> orient;
    pts.push_back(chain.indices().front());
    for (std::size_t k = 1; k < chain.indices().size(); ++k) {
        if (chain.orientations()[k - 1] == 0) continue;
        pts.push_back(chain.indices()[k]);
        orient.push_back(chain.orientations()[k - 1]);
    }
    const int steps = static_cast<int>(orient.size());
    if (steps == 0) return report;

    auto segment_length = [&](int from, int to) {
        Scalar sum(0);
        for (int k = from + 1; k <= to; ++k) sum += s.dist(pts[k - 1], pts[k]);
        return sum;
    };

    if (chain.monotone()) {
        Scalar total = segment_length(0, steps);
        const Scalar& direct = s.dist(pts.front(), pts.back());
        Scalar dtau = abs(s.tau(pts.back()) - s.tau(pts.front()));
        if (!s.eq(total, direct) || !s.eq(direct, dtau))
            report.add(Axiom::ChainRealizer, {pts.front(), pts.back()},
                       "sum " + total.str() + ", d " + direct.str() + ", |dtau| " +
                           dtau.str());
        return report;
    }

    // Realizer between all of its points?
    for (int u = 0; u <= steps; ++u)
        for (int v = u + 1; v <= steps; ++v)
            if (!s.eq(segment_length(u, v), s.dist(pts[u], pts[v]))) return report;

    // It is a realizer: pairs strictly straddling an orientation flip must
    // not be causally related.
    CausalRelation rel = causal_matrix(s);
    for (int k = 1; k < steps; ++k) {
        if (orient[k - 1] == orient[k]) continue;
        for (int u = 0; u < k; ++u)
            for (int v = k + 1; v <= steps; ++v)
                if (rel.related(pts[u], pts[v]))
                    report.add(Axiom::FlipSeparation, {pts[u], pts[k], pts[v]},
                               "pair straddling the flip at position " + std::to_string(k) +
                                   " is causally related");
    }
    return report;
}

}  // namespace tms

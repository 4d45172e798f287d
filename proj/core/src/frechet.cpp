#include "tms/frechet.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/scaled.hpp"
#include "tms/causal.hpp"
#include "tms/errors.hpp"

namespace tms {

FrechetEmbedding::FrechetEmbedding(std::vector<int> ordering, bool timed,
                                   Matrix<Scalar> rows)
    : ordering_(std::move(ordering)), timed_(timed), rows_(std::move(rows)) {
    if (ordering_.empty()) throw std::invalid_argument("empty ordering");
    if (rows_.cols() != ordering_.size() + (timed_ ? 1 : 0))
        throw std::invalid_argument("row width does not match the ordering");
}

Scalar FrechetEmbedding::sup_distance(int i, const FrechetEmbedding& other, int j) const {
    if (dim() != other.dim())
        throw std::invalid_argument("sup distance between different dimensions");
    Scalar best(0);
    for (int k = 0; k < dim(); ++k) {
        Scalar v = abs(rows_(i, k) - other.rows_(j, k));
        if (best < v) best = std::move(v);
    }
    return best;
}

bool FrechetEmbedding::distance_preserving(const TimedMetricSpace& space,
                                           std::pair<int, int>* witness) const {
    const int n = point_count();
    if (n != space.size()) throw std::invalid_argument("embedding size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!space.eq(sup_distance(i, *this, j), space.dist(i, j))) {
                if (witness) *witness = {i, j};
                return false;
            }
        }
    return true;
}

bool FrechetEmbedding::time_preserving(const TimedMetricSpace& space, int* witness) const {
    if (!timed_) return false;
    const int n = point_count();
    if (n != space.size()) throw std::invalid_argument("embedding size mismatch");
    for (int i = 0; i < n; ++i)
        if (!space.eq(rows_(i, 0), space.tau(i))) {
            if (witness) *witness = i;
            return false;
        }
    return true;
}

FrechetEmbedding frechet_map(const TimedMetricSpace& space, std::vector<int> ordering,
                             bool timed) {
    if (ordering.empty()) throw std::invalid_argument("empty ordering");
    const int n = space.size();
    std::vector<bool> hit(n, false);
    for (int idx : ordering) {
        if (idx < 0 || idx >= n) throw std::invalid_argument("ordering index out of range");
        hit[idx] = true;
    }
    const int width = static_cast<int>(ordering.size()) + (timed ? 1 : 0);
    Matrix<Scalar> rows(n, width, Scalar(0));
    for (int x = 0; x < n; ++x) {
        int k = 0;
        if (timed) rows(x, k++) = space.tau(x);
        for (int idx : ordering) rows(x, k++) = space.dist(idx, x);
    }
    FrechetEmbedding embedding(std::move(ordering), timed, std::move(rows));
    bool surjective = true;
    for (int x = 0; x < n; ++x) surjective = surjective && hit[x];
    if (surjective) {
        std::pair<int, int> witness;
        if (!embedding.distance_preserving(space, &witness))
            throw std::logic_error("surjective ordering failed to preserve d(" +
                                   std::to_string(witness.first) + "," +
                                   std::to_string(witness.second) + ")");
    }
    return embedding;
}

Scalar sup_hausdorff(const FrechetEmbedding& a, const FrechetEmbedding& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("hausdorff between different dimensions");
    Scalar h(0);
    auto one_side = [&](const FrechetEmbedding& from, const FrechetEmbedding& to) {
        for (int i = 0; i < from.point_count(); ++i) {
            Scalar nearest = from.sup_distance(i, to, 0);
            for (int j = 1; j < to.point_count(); ++j)
                nearest = min(nearest, from.sup_distance(i, to, j));
            h = max(h, nearest);
        }
    };
    one_side(a, b);
    one_side(b, a);
    return h;
}

namespace {

/// Partner of `target` on the other side of the correspondence: among pairs
/// covering it, minimal |dtau|, then lowest index.
int pick_partner(const Correspondence& c, const TimedMetricSpace& x,
                 const TimedMetricSpace& y, int target, bool target_in_y) {
    int best = -1;
    Scalar best_gap(0);
    for (const auto& [i, j] : c.pairs()) {
        int from = target_in_y ? j : i;
        int cand = target_in_y ? i : j;
        if (from != target) continue;
        Scalar gap = abs(x.tau(target_in_y ? cand : target) - y.tau(target_in_y ? target : cand));
        if (best < 0 || gap < best_gap || (gap == best_gap && cand < best)) {
            best = cand;
            best_gap = std::move(gap);
        }
    }
    return best;
}

Interleaving interleave_with_bases(const Correspondence& c, const TimedMetricSpace& x,
                                   const TimedMetricSpace& y,
                                   const std::vector<int>& base_x,
                                   const std::vector<int>& base_y) {
    std::vector<int> ord_x, ord_y;
    const std::size_t rounds = std::max(base_x.size(), base_y.size());
    for (std::size_t k = 0; k < rounds; ++k) {
        if (k < base_x.size()) {
            ord_x.push_back(base_x[k]);
            ord_y.push_back(pick_partner(c, x, y, base_x[k], false));
        }
        if (k < base_y.size()) {
            ord_x.push_back(pick_partner(c, x, y, base_y[k], true));
            ord_y.push_back(base_y[k]);
        }
    }
    FrechetEmbedding ex = frechet_map(x, std::move(ord_x), true);
    FrechetEmbedding ey = frechet_map(y, std::move(ord_y), true);
    Scalar achieved = sup_hausdorff(ex, ey);
    return {std::move(ex), std::move(ey), std::move(achieved)};
}

}  // namespace

Interleaving interleave(const Correspondence& c, const TimedMetricSpace& x,
                        const TimedMetricSpace& y) {
    if (c.nx() != x.size() || c.ny() != y.size())
        throw std::invalid_argument("correspondence index ranges do not match the spaces");
    if (auto u = c.uncovered())
        throw std::invalid_argument("not a correspondence: uncovered index " +
                                    std::to_string(u->second));
    std::vector<int> base_x(x.size()), base_y(y.size());
    for (int i = 0; i < x.size(); ++i) base_x[i] = i;
    for (int j = 0; j < y.size(); ++j) base_y[j] = j;
    return interleave_with_bases(c, x, y, base_x, base_y);
}

UpperBound tgh_upper_bound(const TimedMetricSpace& x, const TimedMetricSpace& y,
                           UpperBoundMode mode, const SearchOptions& opts) {
    require_valid(x);
    require_valid(y);
    if (mode == UpperBoundMode::EnumerateOrderings) {
        const long long cells = static_cast<long long>(x.size()) * y.size();
        if (cells > opts.max_enumerate_cells)
            throw Refusal("ordering enumeration refused: " + std::to_string(cells) +
                          " cells exceed the cap of " + std::to_string(opts.max_enumerate_cells));
        detail::AnyPairData data = detail::make_pair_data(x, y);
        detail::MinimalWitness witness;
        std::visit(
            [&](const auto& d) {
                auto outcome = detail::enumerate_orderings(d);
                witness = std::move(outcome.witness);
            },
            data);
        Correspondence best(x.size(), y.size(), detail::witness_pairs(witness));
        // Rebuild the winning pair as explicit embeddings; the columns of the
        // winning candidate are exactly the pairs of the witness.
        std::vector<int> ord_x, ord_y;
        for (const auto& [i, j] : best.pairs()) {
            ord_x.push_back(i);
            ord_y.push_back(j);
        }
        FrechetEmbedding ex = frechet_map(x, std::move(ord_x), true);
        FrechetEmbedding ey = frechet_map(y, std::move(ord_y), true);
        Scalar achieved = sup_hausdorff(ex, ey);
        return {std::move(achieved), std::move(ex), std::move(ey)};
    }

    // FromCorrespondence: interleave the best correspondence available.
    const long long cells = static_cast<long long>(x.size()) * y.size();
    LowerBoundMode lb_mode = cells <= opts.max_exhaustive_cells ? LowerBoundMode::Exhaustive
                                                                : LowerBoundMode::LocalSearch;
    LowerBound lb = tgh_lower_bound(x, y, lb_mode, opts);
    Interleaving best = interleave(lb.witness, x, y);

    // A second cheap candidate: the greedy local-search matching, when the
    // exhaustive witness was already used above this often coincides.
    if (lb_mode == LowerBoundMode::Exhaustive) {
        LowerBound greedy = tgh_lower_bound(x, y, LowerBoundMode::LocalSearch, opts);
        Interleaving alt = interleave(greedy.witness, x, y);
        if (alt.achieved < best.achieved) best = std::move(alt);
    }
    return {std::move(best.achieved), std::move(best.x), std::move(best.y)};
}

ProductDecomposition decompose_product_map(const FrechetEmbedding& embedding,
                                           const TimedMetricSpace& space) {
    if (!embedding.timed())
        throw std::invalid_argument("decomposition needs a timed embedding");
    std::pair<int, int> witness;
    if (!embedding.distance_preserving(space, &witness))
        throw std::invalid_argument("embedding does not preserve the distance of (" +
                                    std::to_string(witness.first) + "," +
                                    std::to_string(witness.second) + ")");
    const int n = embedding.point_count();
    const int width = embedding.dim() - 1;
    ProductDecomposition out;
    out.time_part.reserve(n);
    out.space_part = Matrix<Scalar>(n, width, Scalar(0));
    for (int i = 0; i < n; ++i) {
        out.time_part.push_back(embedding.coord(i, 0));
        for (int k = 0; k < width; ++k) out.space_part(i, k) = embedding.coord(i, k + 1);
    }

    CausalRelation rel = causal_matrix(space);
    auto zeta_dist = [&](int i, int j) {
        Scalar best(0);
        for (int k = 0; k < width; ++k) {
            Scalar v = abs(out.space_part(i, k) - out.space_part(j, k));
            if (best < v) best = std::move(v);
        }
        return best;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Scalar zd = zeta_dist(i, j);
            if (!space.le(zd, space.dist(i, j)))
                out.report.add(Axiom::Lipschitz, {i, j},
                               "zeta distance " + zd.str() + " exceeds d = " +
                                   space.dist(i, j).str());
            if (!rel.related(i, j) && !space.eq(zd, space.dist(i, j)))
                out.report.add(Axiom::EmbeddingIsometry, {i, j},
                               "non causally related pair with zeta distance " + zd.str() +
                                   " != d = " + space.dist(i, j).str());
        }
    return out;
}

}  // namespace tms

#include "tms/nets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tms/causal.hpp"
#include "tms/covering.hpp"
#include "tms/errors.hpp"

namespace tms {

namespace {

Scalar power_of_half(int level) { return Scalar::rational(1, 1L << level); }

}  // namespace

namespace {

/// Shared level sizes up to max_depth; stops early at the first level whose
/// net is surjective on every space unless an exact depth is forced.
HierarchyParams grown_params(const std::vector<const TimedMetricSpace*>& spaces,
                             int max_depth, long max_addresses, bool force_depth) {
    if (spaces.empty()) throw std::invalid_argument("no spaces");
    HierarchyParams params;
    params.max_addresses = max_addresses;
    long count = 1;
    for (int level = 1; level <= max_depth; ++level) {
        Scalar eps = power_of_half(level);
        int size = 0;
        bool all_surjective = true;
        for (const TimedMetricSpace* s : spaces) {
            CoveringResult cover = covering_number(*s, eps);
            size = std::max(size, cover.count);
            if (cover.count < s->size()) all_surjective = false;
        }
        params.level_sizes.push_back(size);
        params.depth = level;
        if (count > max_addresses / size)
            throw Refusal("hierarchy refused: address count exceeds the cap of " +
                          std::to_string(max_addresses) + " at level " +
                          std::to_string(level));
        count *= size;
        if (!force_depth && all_surjective) return params;
    }
    if (force_depth) return params;
    throw Refusal("hierarchy refused: no surjective level within depth " +
                  std::to_string(max_depth));
}

}  // namespace

HierarchyParams default_hierarchy_params(const std::vector<const TimedMetricSpace*>& spaces,
                                         int max_depth, long max_addresses) {
    return grown_params(spaces, max_depth, max_addresses, false);
}

Scalar NetHierarchy::epsilon(int level) const { return power_of_half(level); }

int NetHierarchy::surjective_depth(int s, const TimedMetricSpace& space) const {
    for (int level = 1; level <= depth_; ++level) {
        std::set<int> hit(sel_[s][level - 1].begin(), sel_[s][level - 1].end());
        if (static_cast<int>(hit.size()) == space.size()) return level;
    }
    return -1;
}

ValidationReport NetHierarchy::verify(
    const std::vector<const TimedMetricSpace*>& spaces) const {
    ValidationReport report;
    for (int s = 0; s < space_count(); ++s) {
        const TimedMetricSpace& sp = *spaces[s];
        for (int level = 1; level <= depth_; ++level) {
            Scalar eps = epsilon(level);
            for (int x = 0; x < sp.size(); ++x) {
                bool covered = false;
                for (long a = 0; a < counts_[level - 1] && !covered; ++a)
                    covered = sp.dist(x, selection(s, level, a)) < eps;
                if (!covered)
                    report.add(Axiom::NetCovering, {s, level, x},
                               "point not within eps_" + std::to_string(level) +
                                   " of any selection");
            }
        }
        for (int level = 2; level <= depth_; ++level) {
            Scalar bound = Scalar(2) * epsilon(level - 1);
            for (long a = 0; a < counts_[level - 1]; ++a) {
                int child = selection(s, level, a);
                int par = selection(s, level - 1, parent(level, a));
                if (!(sp.dist(child, par) < bound))
                    report.add(Axiom::NetNesting, {s, level, static_cast<int>(a)},
                               "selection strays " + sp.dist(child, par).str() +
                                   " >= 2 eps_" + std::to_string(level - 1));
            }
        }
    }
    return report;
}

NetHierarchy build_hierarchy(const std::vector<const TimedMetricSpace*>& spaces,
                             const HierarchyParams& params) {
    if (spaces.empty()) throw std::invalid_argument("no spaces");
    if (params.depth <= 0 ||
        static_cast<int>(params.level_sizes.size()) != params.depth)
        throw std::invalid_argument("hierarchy params need one level size per level");

    NetHierarchy h;
    h.depth_ = params.depth;
    h.sizes_ = params.level_sizes;
    h.counts_.resize(params.depth);
    long count = 1;
    for (int level = 1; level <= params.depth; ++level) {
        if (h.sizes_[level - 1] <= 0)
            throw std::invalid_argument("level sizes must be positive");
        if (count > params.max_addresses / h.sizes_[level - 1])
            throw Refusal("hierarchy refused: address count exceeds the cap of " +
                          std::to_string(params.max_addresses) + " at level " +
                          std::to_string(level));
        count *= h.sizes_[level - 1];
        h.counts_[level - 1] = count;
    }

    h.diam_bound_ = Scalar(0);
    h.tau_bound_ = Scalar(0);
    for (const TimedMetricSpace* s : spaces) {
        h.diam_bound_ = max(h.diam_bound_, s->diam());
        h.tau_bound_ = max(h.tau_bound_, s->tau_max());
    }

    h.sel_.resize(spaces.size());
    for (std::size_t s = 0; s < spaces.size(); ++s) {
        const TimedMetricSpace& sp = *spaces[s];
        // Global greedy nets per level. Entries beyond a space's own net
        // size duplicate the parent center: a saturated space has nothing
        // left to refine, and duplication keeps the nesting ball tight.
        std::vector<std::vector<int>> nets(params.depth);
        for (int level = 1; level <= params.depth; ++level) {
            CoveringResult cover = covering_number(sp, power_of_half(level));
            if (cover.count > h.sizes_[level - 1])
                throw Refusal("hierarchy refused: space " + std::to_string(s) +
                              " needs " + std::to_string(cover.count) +
                              " balls at level " + std::to_string(level) +
                              " but the level size is " +
                              std::to_string(h.sizes_[level - 1]));
            nets[level - 1] = cover.centers;
        }

        auto& levels = h.sel_[s];
        levels.resize(params.depth);
        levels[0].assign(h.sizes_[0], nets[0][0]);
        for (int b = 0; b < static_cast<int>(nets[0].size()); ++b) levels[0][b] = nets[0][b];
        for (int level = 2; level <= params.depth; ++level) {
            Scalar reach = power_of_half(level - 1) + power_of_half(level);
            const auto& parents = levels[level - 2];
            auto& cur = levels[level - 1];
            cur.resize(h.counts_[level - 1]);
            const int width = h.sizes_[level - 1];
            const int net_size = static_cast<int>(nets[level - 1].size());
            for (long pa = 0; pa < static_cast<long>(parents.size()); ++pa) {
                int center = parents[pa];
                for (int b = 0; b < width; ++b) {
                    if (b >= net_size) {
                        cur[pa * width + b] = center;
                        continue;
                    }
                    int cand = nets[level - 1][b];
                    cur[pa * width + b] = sp.dist(cand, center) < reach ? cand : center;
                }
            }
        }
    }
    return h;
}

long address_of_point(const NetHierarchy& h, int space, int point) {
    const int level = h.depth();
    for (long a = 0; a < h.level_count(level); ++a)
        if (h.selection(space, level, a) == point) return a;
    return -1;
}

FunctionEmbedding::FunctionEmbedding(const TimedMetricSpace& space,
                                     const NetHierarchy& hierarchy, int space_index)
    : space_(&space), hierarchy_(&hierarchy), index_(space_index) {
    if (space_index < 0 || space_index >= hierarchy.space_count())
        throw std::invalid_argument("space index outside the hierarchy");
}

Scalar FunctionEmbedding::coord(int point, int level, long a) const {
    return space_->dist(point, hierarchy_->selection(index_, level, a));
}

Scalar FunctionEmbedding::sup_distance(int point, const FunctionEmbedding& other,
                                       int other_point, bool timed) const {
    if (hierarchy_ != other.hierarchy_)
        throw std::invalid_argument("embeddings over different hierarchies");
    Scalar best(0);
    if (timed) best = abs(space_->tau(point) - other.space_->tau(other_point));
    for (int level = 1; level <= hierarchy_->depth(); ++level)
        for (long a = 0; a < hierarchy_->level_count(level); ++a) {
            Scalar v = abs(coord(point, level, a) - other.coord(other_point, level, a));
            if (best < v) best = std::move(v);
        }
    return best;
}

ValidationReport FunctionEmbedding::verify() const {
    ValidationReport report;
    const TimedMetricSpace& sp = *space_;
    const NetHierarchy& h = *hierarchy_;
    const Scalar zero(0);
    for (int x = 0; x < sp.size(); ++x)
        for (long a = 0; a < h.level_count(1); ++a) {
            Scalar v = coord(x, 1, a);
            if (v < zero || h.diameter_bound() < v)
                report.add(Axiom::EmbeddingBound, {x, static_cast<int>(a)},
                           "level-1 coordinate " + v.str() + " outside [0, D]");
        }
    for (int level = 2; level <= h.depth(); ++level) {
        Scalar bound = Scalar(2) * h.epsilon(level - 1);
        for (int x = 0; x < sp.size(); ++x)
            for (long a = 0; a < h.level_count(level); ++a) {
                Scalar v = abs(coord(x, level, a) - coord(x, level - 1, h.parent(level, a)));
                if (!sp.le(v, bound))
                    report.add(Axiom::EmbeddingContinuity,
                               {x, level, static_cast<int>(a)},
                               v.str() + " > 2 eps_" + std::to_string(level - 1));
            }
    }
    const bool surjective = h.surjective_depth(index_, sp) > 0;
    for (int x = 0; x < sp.size(); ++x)
        for (int y = x + 1; y < sp.size(); ++y) {
            Scalar v = sup_distance(x, *this, y, false);
            if (!sp.le(v, sp.dist(x, y)))
                report.add(Axiom::EmbeddingIsometry, {x, y},
                           "row distance " + v.str() + " exceeds d");
            if (surjective && !sp.eq(v, sp.dist(x, y)))
                report.add(Axiom::EmbeddingIsometry, {x, y},
                           "row distance " + v.str() + " != d at surjective depth");
        }
    return report;
}

FunctionEmbedding embed_in_F(const TimedMetricSpace& space, const NetHierarchy& hierarchy,
                             int space_index) {
    return FunctionEmbedding(space, hierarchy, space_index);
}

namespace {

/// Distinct (selection here, selection in limit) pairs across all levels;
/// sup distances only depend on these.
std::vector<std::pair<int, int>> selection_pairs(const NetHierarchy& h, int s, int limit) {
    std::set<std::pair<int, int>> seen;
    for (int level = 1; level <= h.depth(); ++level)
        for (long a = 0; a < h.level_count(level); ++a)
            seen.emplace(h.selection(s, level, a), h.selection(limit, level, a));
    return {seen.begin(), seen.end()};
}

}  // namespace

ConvergenceReport convergence_report(const NetHierarchy& h,
                                     const std::vector<const TimedMetricSpace*>& spaces,
                                     const TimedMetricSpace& limit,
                                     const Scalar* diameter_cap, const Scalar* tau_cap) {
    if (h.space_count() != static_cast<int>(spaces.size()) + 1)
        throw std::invalid_argument("hierarchy was not built over spaces + limit");
    if (diameter_cap || tau_cap) {
        for (std::size_t j = 0; j < spaces.size(); ++j) {
            if (diameter_cap && *diameter_cap < spaces[j]->diam())
                throw Refusal("equiboundedness failed: space " + std::to_string(j + 1) +
                              " has diameter " + spaces[j]->diam().str());
            if (tau_cap && *tau_cap < spaces[j]->tau_max())
                throw Refusal("equiboundedness failed: space " + std::to_string(j + 1) +
                              " has tau_max " + spaces[j]->tau_max().str());
        }
    }

    ConvergenceReport out;
    out.depth = h.depth();
    out.resolution = h.epsilon(h.depth());
    out.diameter_bound = h.diameter_bound();
    out.tau_bound = h.tau_bound();

    const int limit_index = static_cast<int>(spaces.size());
    const int m = h.depth();
    for (std::size_t j = 0; j < spaces.size(); ++j) {
        const TimedMetricSpace& sp = *spaces[j];
        ConvergenceRow row;
        row.j = static_cast<int>(j) + 1;

        auto cols = selection_pairs(h, static_cast<int>(j), limit_index);
        auto timed_sup = [&](int x, int y) {
            Scalar best = abs(sp.tau(x) - limit.tau(y));
            for (const auto& [u, v] : cols) {
                Scalar w = abs(sp.dist(x, u) - limit.dist(y, v));
                if (best < w) best = std::move(w);
            }
            return best;
        };
        Scalar h_val(0);
        for (int x = 0; x < sp.size(); ++x) {
            bool first = true;
            Scalar nearest(0);
            for (int y = 0; y < limit.size(); ++y) {
                Scalar v = timed_sup(x, y);
                if (first || v < nearest) {
                    nearest = std::move(v);
                    first = false;
                }
            }
            h_val = max(h_val, nearest);
        }
        for (int y = 0; y < limit.size(); ++y) {
            bool first = true;
            Scalar nearest(0);
            for (int x = 0; x < sp.size(); ++x) {
                Scalar v = timed_sup(x, y);
                if (first || v < nearest) {
                    nearest = std::move(v);
                    first = false;
                }
            }
            h_val = max(h_val, nearest);
        }
        row.hausdorff = std::move(h_val);

        // Address-level deviations at the deepest level; distinct selection
        // pairs suffice for both sups.
        std::set<std::pair<int, int>> classes;
        for (long a = 0; a < h.level_count(m); ++a)
            classes.emplace(h.selection(static_cast<int>(j), m, a),
                            h.selection(limit_index, m, a));
        Scalar tau_dev(0), dist_dev(0);
        for (const auto& [u, v] : classes) {
            tau_dev = max(tau_dev, abs(sp.tau(u) - limit.tau(v)));
            for (const auto& [u2, v2] : classes)
                dist_dev = max(dist_dev, abs(sp.dist(u, u2) - limit.dist(v, v2)));
        }
        row.sup_tau_dev = std::move(tau_dev);
        row.sup_dist_dev = std::move(dist_dev);
        out.rows.push_back(std::move(row));
    }
    return out;
}

ConvergenceRun run_convergence(const std::vector<const TimedMetricSpace*>& spaces,
                               const TimedMetricSpace& limit, int depth_override) {
    std::vector<const TimedMetricSpace*> all = spaces;
    all.push_back(&limit);
    HierarchyParams params = depth_override > 0
                                 ? grown_params(all, depth_override, 500000, true)
                                 : default_hierarchy_params(all);
    NetHierarchy h = build_hierarchy(all, params);
    ConvergenceReport report = convergence_report(h, spaces, limit);
    return {std::move(h), std::move(report)};
}

StabilityReport causal_stability_check(
    const NetHierarchy& h, const std::vector<const TimedMetricSpace*>& spaces,
    const TimedMetricSpace& limit, const ConvergenceReport& report,
    const std::vector<std::pair<int, int>>& related_pairs,
    const std::vector<std::pair<long, long>>& limit_address_pairs, const Scalar& delta) {
    for (const auto& row : report.rows)
        if (delta < row.hausdorff)
            throw Refusal("stability undefined at this resolution: reported Hausdorff " +
                          row.hausdorff.str() + " at j=" + std::to_string(row.j) +
                          " exceeds delta " + delta.str());

    StabilityReport out;
    out.c = Scalar(4);
    const int limit_index = static_cast<int>(spaces.size());
    const int m = h.depth();

    if (!related_pairs.empty() && related_pairs.size() != spaces.size())
        throw std::invalid_argument("one related pair per space expected");

    for (std::size_t j = 0; j < related_pairs.size(); ++j) {
        const TimedMetricSpace& sp = *spaces[j];
        auto [pj, qj] = related_pairs[j];
        CausalRelation rel = causal_matrix(sp);
        if (!rel.related(pj, qj))
            throw std::invalid_argument("pair (" + std::to_string(pj) + "," +
                                        std::to_string(qj) + ") is not causally related in space " +
                                        std::to_string(j + 1));
        auto cols = selection_pairs(h, static_cast<int>(j), limit_index);
        auto match = [&](int x) {
            int best = 0;
            bool first = true;
            Scalar nearest(0);
            for (int y = 0; y < limit.size(); ++y) {
                Scalar v = abs(sp.tau(x) - limit.tau(y));
                for (const auto& [u, w] : cols) {
                    Scalar c = abs(sp.dist(x, u) - limit.dist(y, w));
                    if (v < c) v = std::move(c);
                }
                if (first || v < nearest) {
                    nearest = std::move(v);
                    best = y;
                    first = false;
                }
            }
            return best;
        };
        StabilityItem1Row row;
        row.j = static_cast<int>(j) + 1;
        row.p_limit = match(pj);
        row.q_limit = match(qj);
        row.defect = abs(abs(limit.tau(row.p_limit) - limit.tau(row.q_limit)) -
                         limit.dist(row.p_limit, row.q_limit));
        row.radius = report.rows[j].hausdorff;
        row.within = row.defect <= out.c * row.radius;
        out.item1.push_back(std::move(row));
    }

    for (const auto& [aa, ab] : limit_address_pairs) {
        StabilityItem2 item;
        item.addr_a = aa;
        item.addr_b = ab;
        int pa = h.selection(limit_index, m, aa);
        int pb = h.selection(limit_index, m, ab);
        item.gap = abs(abs(limit.tau(pa) - limit.tau(pb)) - limit.dist(pa, pb));
        if (!(item.gap > Scalar(0)))
            throw std::invalid_argument("limit address pair is causally related; item 2 needs a positive gap");
        Scalar half = item.gap / Scalar(2);
        item.persistent = true;
        for (std::size_t j = 0; j < spaces.size(); ++j) {
            Scalar dev = report.rows[j].sup_tau_dev + report.rows[j].sup_dist_dev;
            if (!(dev < half)) continue;
            if (item.threshold_j < 0) item.threshold_j = static_cast<int>(j) + 1;
            const TimedMetricSpace& sp = *spaces[j];
            int u = h.selection(static_cast<int>(j), m, aa);
            int v = h.selection(static_cast<int>(j), m, ab);
            bool related = sp.eq(abs(sp.tau(u) - sp.tau(v)), sp.dist(u, v));
            if (related && item.first_violation_j < 0) {
                item.persistent = false;
                item.first_violation_j = static_cast<int>(j) + 1;
            }
        }
        out.item2.push_back(std::move(item));
    }
    return out;
}

}  // namespace tms

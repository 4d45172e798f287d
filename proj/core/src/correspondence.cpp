#include "tms/correspondence.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/scaled.hpp"
#include "tms/errors.hpp"

namespace tms {

Correspondence::Correspondence(int nx, int ny, std::vector<std::pair<int, int>> pairs)
    : nx_(nx), ny_(ny), pairs_(std::move(pairs)) {
    if (nx_ <= 0 || ny_ <= 0) throw std::invalid_argument("correspondence over empty index sets");
    for (const auto& [i, j] : pairs_)
        if (i < 0 || i >= nx_ || j < 0 || j >= ny_)
            throw std::invalid_argument("correspondence pair out of range");
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Correspondence Correspondence::identity(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, i);
    return Correspondence(n, n, std::move(pairs));
}

Correspondence Correspondence::full(int nx, int ny) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) pairs.emplace_back(i, j);
    return Correspondence(nx, ny, std::move(pairs));
}

bool Correspondence::contains(int i, int j) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(i, j));
}

std::optional<std::pair<int, int>> Correspondence::uncovered() const {
    std::vector<bool> cx(nx_, false), cy(ny_, false);
    for (const auto& [i, j] : pairs_) {
        cx[i] = true;
        cy[j] = true;
    }
    for (int i = 0; i < nx_; ++i)
        if (!cx[i]) return std::make_pair(0, i);
    for (int j = 0; j < ny_; ++j)
        if (!cy[j]) return std::make_pair(1, j);
    return std::nullopt;
}

bool Correspondence::total() const { return !uncovered().has_value(); }

Correspondence Correspondence::transpose() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(pairs_.size());
    for (const auto& [i, j] : pairs_) pairs.emplace_back(j, i);
    return Correspondence(ny_, nx_, std::move(pairs));
}

namespace {

void require_total(const Correspondence& c, const TimedMetricSpace& x,
                   const TimedMetricSpace& y) {
    if (c.nx() != x.size() || c.ny() != y.size())
        throw std::invalid_argument("correspondence index ranges do not match the spaces");
    if (auto u = c.uncovered()) {
        throw std::invalid_argument("not a correspondence: index " +
                                    std::to_string(u->second) + " of " +
                                    (u->first == 0 ? "the first" : "the second") +
                                    " space is uncovered");
    }
}

}  // namespace

Scalar distortion(const Correspondence& c, const TimedMetricSpace& x,
                  const TimedMetricSpace& y) {
    require_total(c, x, y);
    Scalar best(0);
    const auto& pairs = c.pairs();
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a; b < pairs.size(); ++b) {
            Scalar v = abs(x.dist(pairs[a].first, pairs[b].first) -
                           y.dist(pairs[a].second, pairs[b].second));
            if (best < v) best = std::move(v);
        }
    return best;
}

Scalar time_defect(const Correspondence& c, const TimedMetricSpace& x,
                   const TimedMetricSpace& y) {
    require_total(c, x, y);
    Scalar best(0);
    for (const auto& [i, j] : c.pairs()) {
        Scalar v = abs(x.tau(i) - y.tau(j));
        if (best < v) best = std::move(v);
    }
    return best;
}

Scalar correspondence_objective(const Correspondence& c, const TimedMetricSpace& x,
                                const TimedMetricSpace& y) {
    return max(time_defect(c, x, y), distortion(c, x, y) / Scalar(2));
}

Correspondence compose(const Correspondence& xy, const Correspondence& yz) {
    if (xy.ny() != yz.nx())
        throw std::invalid_argument("composition over mismatched middle index sets");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [i, j] : xy.pairs())
        for (const auto& [j2, k] : yz.pairs())
            if (j == j2) pairs.emplace_back(i, k);
    return Correspondence(xy.nx(), yz.ny(), std::move(pairs));
}

Scalar hausdorff_distance(std::span<const int> a, std::span<const int> b,
                          const MetricSpace& ambient) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff over an empty set");
    for (int i : a)
        if (i < 0 || i >= ambient.size()) throw std::invalid_argument("index out of range");
    for (int j : b)
        if (j < 0 || j >= ambient.size()) throw std::invalid_argument("index out of range");
    Scalar h(0);
    auto one_side = [&](std::span<const int> from, std::span<const int> to) {
        for (int u : from) {
            Scalar nearest = ambient.dist(u, to[0]);
            for (int w : to.subspan(1)) nearest = min(nearest, ambient.dist(u, w));
            h = max(h, nearest);
        }
    };
    one_side(a, b);
    one_side(b, a);
    return h;
}

Scalar hausdorff_distance(std::span<const int> a, std::span<const int> b,
                          const TimedMetricSpace& ambient) {
    return hausdorff_distance(a, b, ambient.metric());
}

ThresholdCorrespondence threshold_correspondence(std::span<const int> a,
                                                 std::span<const int> b,
                                                 const MetricSpace& ambient,
                                                 const Scalar& radius) {
    if (!(radius > Scalar(0))) throw std::invalid_argument("threshold radius must be positive");
    if (a.empty() || b.empty()) throw std::invalid_argument("threshold over an empty set");
    ThresholdCorrespondence out;
    out.distortion = Scalar(0);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (ambient.dist(a[i], b[j]) < radius)
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Correspondence c(static_cast<int>(a.size()), static_cast<int>(b.size()), std::move(pairs));
    if (auto u = c.uncovered()) {
        out.uncovered_side = u->first;
        out.uncovered_index = u->second;
        return out;
    }
    Scalar dist(0);
    const auto& ps = c.pairs();
    for (std::size_t p = 0; p < ps.size(); ++p)
        for (std::size_t q = p; q < ps.size(); ++q) {
            Scalar v = abs(ambient.dist(a[ps[p].first], a[ps[q].first]) -
                           ambient.dist(b[ps[p].second], b[ps[q].second]));
            if (dist < v) dist = std::move(v);
        }
    out.distortion = std::move(dist);
    out.corr = std::move(c);
    return out;
}

LowerBound tgh_lower_bound(const TimedMetricSpace& x, const TimedMetricSpace& y,
                           LowerBoundMode mode, const SearchOptions& opts) {
    require_valid(x);
    require_valid(y);
    const long long cells = static_cast<long long>(x.size()) * y.size();
    if (mode == LowerBoundMode::Exhaustive && cells > opts.max_exhaustive_cells)
        throw Refusal("exhaustive correspondence search refused: " + std::to_string(cells) +
                      " cells exceed the cap of " + std::to_string(opts.max_exhaustive_cells) +
                      "; use local search");

    detail::AnyPairData data = detail::make_pair_data(x, y);
    Scalar value;
    detail::MinimalWitness witness;
    bool exact_min = (mode == LowerBoundMode::Exhaustive);
    std::visit(
        [&](const auto& d) {
            auto outcome = (mode == LowerBoundMode::Exhaustive)
                               ? detail::exhaustive_search(d)
                               : detail::local_search(d, opts.restarts, opts.seed);
            value = detail::from_kernel(outcome.doubled, d.den, 2);
            witness = std::move(outcome.witness);
        },
        data);
    Correspondence c(x.size(), y.size(), detail::witness_pairs(witness));
    return {std::move(value), std::move(c), exact_min};
}

}  // namespace tms

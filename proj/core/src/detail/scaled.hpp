#pragma once

// Search kernels for the correspondence and ordering enumerations.
//
// Exact spaces are rescaled to a common denominator so the hot loops run on
// 64-bit integers; float spaces run on doubles. If the rescaled magnitudes
// would not fit the integer headroom, the same kernels run on Scalar -- slow
// but still exact.

#include <cstdint>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "tms/scalar.hpp"
#include "tms/space.hpp"

namespace tms::detail {

template <class T>
struct PairData {
    int n = 0, m = 0;
    std::vector<T> dx, dy;  // n*n and m*m distance tables
    std::vector<T> tx, ty;  // time vectors
    long long den = 1;      // meaningful for T = long long only

    const T& ddx(int i, int j) const { return dx[static_cast<std::size_t>(i) * n + j]; }
    const T& ddy(int i, int j) const { return dy[static_cast<std::size_t>(i) * m + j]; }
};

using AnyPairData =
    std::variant<PairData<long long>, PairData<double>, PairData<Scalar>>;

/// Chooses the arithmetic: ints when both spaces are exact and fit,
/// doubles when either is float mode, Scalars as the exact fallback.
AnyPairData make_pair_data(const TimedMetricSpace& x, const TimedMetricSpace& y);

template <class T>
T kabs(const T& v) {
    return v < T(0) ? -v : v;
}

/// Converts a kernel value back to a Scalar; extra_den divides once more
/// (used to halve doubled objectives).
template <class T>
Scalar from_kernel(const T& v, long long den, long long extra_den) {
    if constexpr (std::is_same_v<T, long long>) {
        mpq_class q(mpz_class(static_cast<long>(v)),
                    mpz_class(static_cast<long>(den)) * static_cast<long>(extra_den));
        return Scalar::rational(std::move(q));
    } else if constexpr (std::is_same_v<T, double>) {
        return Scalar::real(v / static_cast<double>(extra_den));
    } else {
        return extra_den == 1 ? v : v / Scalar(static_cast<long>(extra_den));
    }
}

struct MinimalWitness {
    std::vector<int> f;  // X -> Y
    std::vector<int> g;  // Y -> X
};

/// graph(f) united with graph(g), sorted and deduplicated.
std::vector<std::pair<int, int>> witness_pairs(const MinimalWitness& w);

/// max(2 * time defect, distortion) of the pair set.
template <class T>
T doubled_objective(const PairData<T>& d, const std::vector<std::pair<int, int>>& pairs) {
    T best(0);
    for (const auto& [i, j] : pairs) {
        T td = kabs<T>(d.tx[i] - d.ty[j]);
        td = td + td;
        if (best < td) best = td;
    }
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            T v = kabs<T>(d.ddx(pairs[a].first, pairs[b].first) -
                          d.ddy(pairs[a].second, pairs[b].second));
            if (best < v) best = v;
        }
    return best;
}

template <class T>
struct SearchOutcome {
    T doubled;
    MinimalWitness witness;
};

namespace kernel {

/// Odometer over all functions dom -> codom.
template <class Visit>
void each_function(int dom, int codom, Visit&& visit) {
    std::vector<int> f(static_cast<std::size_t>(dom), 0);
    for (;;) {
        visit(const_cast<const std::vector<int>&>(f));
        int k = 0;
        while (k < dom) {
            if (++f[k] < codom) break;
            f[k] = 0;
            ++k;
        }
        if (k == dom) break;
    }
}

template <class T>
struct SideEval {
    std::vector<int> fn;
    T within;  // distortion among the graph's own pairs
    T td2;     // doubled time defect of the graph
};

template <class T>
std::vector<SideEval<T>> evaluate_side(const std::vector<T>& dd_dom,
                                       const std::vector<T>& dd_cod,
                                       const std::vector<T>& t_dom,
                                       const std::vector<T>& t_cod, int dom, int cod) {
    std::vector<SideEval<T>> out;
    each_function(dom, cod, [&](const std::vector<int>& f) {
        SideEval<T> e;
        e.fn = f;
        e.within = T(0);
        e.td2 = T(0);
        for (int i = 0; i < dom; ++i) {
            T td = kabs<T>(t_dom[i] - t_cod[f[i]]);
            td = td + td;
            if (e.td2 < td) e.td2 = td;
            for (int k = i + 1; k < dom; ++k) {
                T v = kabs<T>(dd_dom[static_cast<std::size_t>(i) * dom + k] -
                              dd_cod[static_cast<std::size_t>(f[i]) * cod + f[k]]);
                if (e.within < v) e.within = v;
            }
        }
        out.push_back(std::move(e));
    });
    return out;
}

}  // namespace kernel

template <class T>
SearchOutcome<T> exhaustive_search(const PairData<T>& d) {
    const int n = d.n, m = d.m;
    auto fs = kernel::evaluate_side<T>(d.dx, d.dy, d.tx, d.ty, n, m);
    auto gs = kernel::evaluate_side<T>(d.dy, d.dx, d.ty, d.tx, m, n);

    bool have = false;
    T best(0);
    MinimalWitness bw;
    for (const auto& fe : fs) {
        T fbase = fe.within < fe.td2 ? fe.td2 : fe.within;
        if (have && !(fbase < best)) continue;
        for (const auto& ge : gs) {
            T v = fbase;
            if (v < ge.within) v = ge.within;
            if (v < ge.td2) v = ge.td2;
            if (have && !(v < best)) continue;
            bool pruned = false;
            for (int i = 0; i < n && !pruned; ++i)
                for (int j = 0; j < m; ++j) {
                    T c = kabs<T>(d.ddx(i, ge.fn[j]) - d.ddy(fe.fn[i], j));
                    if (v < c) v = c;
                    if (have && !(v < best)) {
                        pruned = true;
                        break;
                    }
                }
            if (pruned) continue;
            best = v;
            bw.f = fe.fn;
            bw.g = ge.fn;
            have = true;
        }
    }
    return {best, std::move(bw)};
}

namespace kernel {

template <class T>
T witness_objective(const PairData<T>& d, const MinimalWitness& w) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(w.f.size() + w.g.size());
    for (int i = 0; i < d.n; ++i) pairs.emplace_back(i, w.f[i]);
    for (int j = 0; j < d.m; ++j) pairs.emplace_back(w.g[j], j);
    return doubled_objective(d, pairs);
}

/// Sorted distance profile padded to a common length; used only to pick a
/// starting matching for the local search.
template <class T>
std::vector<std::vector<T>> profiles(const std::vector<T>& dd, int n, std::size_t width) {
    std::vector<std::vector<T>> p(n);
    for (int i = 0; i < n; ++i) {
        auto& row = p[i];
        row.assign(dd.begin() + static_cast<std::ptrdiff_t>(i) * n,
                   dd.begin() + static_cast<std::ptrdiff_t>(i + 1) * n);
        std::sort(row.begin(), row.end());
        while (row.size() < width) row.push_back(row.back());
    }
    return p;
}

}  // namespace kernel

template <class T>
SearchOutcome<T> local_search(const PairData<T>& d, int restarts, std::uint64_t seed) {
    const int n = d.n, m = d.m;
    const std::size_t width = static_cast<std::size_t>(n < m ? m : n);
    auto px = kernel::profiles<T>(d.dx, n, width);
    auto py = kernel::profiles<T>(d.dy, m, width);
    auto score = [&](int i, int j) {
        T s = kabs<T>(d.tx[i] - d.ty[j]);
        s = s + s;
        for (std::size_t k = 0; k < width; ++k) {
            T v = kabs<T>(px[i][k] - py[j][k]);
            if (s < v) s = v;
        }
        return s;
    };

    MinimalWitness w;
    w.f.assign(n, 0);
    w.g.assign(m, 0);
    for (int i = 0; i < n; ++i) {
        int bestj = 0;
        T bests = score(i, 0);
        for (int j = 1; j < m; ++j) {
            T s = score(i, j);
            if (s < bests) {
                bests = s;
                bestj = j;
            }
        }
        w.f[i] = bestj;
    }
    for (int j = 0; j < m; ++j) {
        int besti = 0;
        T bests = score(0, j);
        for (int i = 1; i < n; ++i) {
            T s = score(i, j);
            if (s < bests) {
                bests = s;
                besti = i;
            }
        }
        w.g[j] = besti;
    }

    auto climb = [&](MinimalWitness cur) {
        T val = kernel::witness_objective(d, cur);
        bool improved = true;
        while (improved) {
            improved = false;
            for (int i = 0; i < n; ++i) {
                int orig = cur.f[i];
                int pick = orig;
                for (int j = 0; j < m; ++j) {
                    if (j == orig) continue;
                    cur.f[i] = j;
                    T v = kernel::witness_objective(d, cur);
                    if (v < val) {
                        val = v;
                        pick = j;
                        improved = true;
                    }
                }
                cur.f[i] = pick;
            }
            for (int j = 0; j < m; ++j) {
                int orig = cur.g[j];
                int pick = orig;
                for (int i = 0; i < n; ++i) {
                    if (i == orig) continue;
                    cur.g[j] = i;
                    T v = kernel::witness_objective(d, cur);
                    if (v < val) {
                        val = v;
                        pick = i;
                        improved = true;
                    }
                }
                cur.g[j] = pick;
            }
        }
        return std::pair<T, MinimalWitness>(val, std::move(cur));
    };

    auto [best, bw] = climb(w);
    std::mt19937_64 eng(seed ^ 0x6d7274696d65ULL);
    for (int r = 0; r < restarts; ++r) {
        MinimalWitness rw;
        rw.f.resize(n);
        rw.g.resize(m);
        for (int i = 0; i < n; ++i) rw.f[i] = static_cast<int>(eng() % m);
        for (int j = 0; j < m; ++j) rw.g[j] = static_cast<int>(eng() % n);
        auto [v, cand] = climb(std::move(rw));
        if (v < best) {
            best = v;
            bw = std::move(cand);
        }
    }
    return {best, std::move(bw)};
}

/// Timed sup-metric Hausdorff distance achieved by the pair of Frechet maps
/// whose coordinate columns are the given pairs (one X point and one Y point
/// per column, time coordinate prepended). Not doubled.
template <class T>
T columns_hausdorff(const PairData<T>& d, const std::vector<std::pair<int, int>>& cols) {
    auto rowdist = [&](int x, int y) {
        T v = kabs<T>(d.tx[x] - d.ty[y]);
        for (const auto& [cx, cy] : cols) {
            T c = kabs<T>(d.ddx(x, cx) - d.ddy(cy, y));
            if (v < c) v = c;
        }
        return v;
    };
    T h(0);
    for (int x = 0; x < d.n; ++x) {
        bool first = true;
        T nearest(0);
        for (int y = 0; y < d.m; ++y) {
            T v = rowdist(x, y);
            if (first || v < nearest) {
                nearest = v;
                first = false;
            }
        }
        if (h < nearest) h = nearest;
    }
    for (int y = 0; y < d.m; ++y) {
        bool first = true;
        T nearest(0);
        for (int x = 0; x < d.n; ++x) {
            T v = rowdist(x, y);
            if (first || v < nearest) {
                nearest = v;
                first = false;
            }
        }
        if (h < nearest) h = nearest;
    }
    return h;
}

template <class T>
struct EnumerateOutcome {
    T value;
    MinimalWitness witness;
};

/// Minimum of columns_hausdorff over all minimal correspondences. Adding a
/// column can only grow sup distances, so minimal column sets suffice.
template <class T>
EnumerateOutcome<T> enumerate_orderings(const PairData<T>& d) {
    const int n = d.n, m = d.m;
    bool have = false;
    T best(0);
    MinimalWitness bw;
    std::vector<std::pair<int, int>> cols;
    kernel::each_function(n, m, [&](const std::vector<int>& f) {
        kernel::each_function(m, n, [&](const std::vector<int>& g) {
            cols.clear();
            for (int i = 0; i < n; ++i) cols.emplace_back(i, f[i]);
            for (int j = 0; j < m; ++j) cols.emplace_back(g[j], j);
            T v = columns_hausdorff(d, cols);
            if (!have || v < best) {
                best = v;
                bw.f = f;
                bw.g = g;
                have = true;
            }
        });
    });
    return {best, std::move(bw)};
}

}  // namespace tms::detail

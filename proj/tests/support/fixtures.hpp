#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tms/generators.hpp"
#include "tms/space.hpp"

namespace fixtures {

inline tms::Scalar q(const char* text) { return tms::Scalar::parse(text); }

/// Small space from rational literals; labels p0, p1, ...
inline tms::TimedMetricSpace make_space(const std::vector<std::vector<const char*>>& dist,
                                        const std::vector<const char*>& tau) {
    const int n = static_cast<int>(tau.size());
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    tms::Matrix<tms::Scalar> d(n, n, tms::Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = q(dist[i][j]);
    std::vector<tms::Scalar> t;
    for (const char* v : tau) t.push_back(q(v));
    return tms::TimedMetricSpace(tms::MetricSpace(std::move(labels), std::move(d)),
                                 std::move(t));
}

inline tms::TimedMetricSpace one_point(const char* tau = "0") {
    return make_space({{"0"}}, {tau});
}

inline tms::TimedMetricSpace two_points(const char* d, const char* t0, const char* t1) {
    return make_space({{"0", d}, {d, "0"}}, {t0, t1});
}

/// Deterministic pseudo-random valid space, cycling through the generator
/// families. Sizes 1..max_n.
inline tms::TimedMetricSpace random_space(std::uint64_t seed, int max_n) {
    int n = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n));
    switch ((seed / 7) % 3) {
        case 0: return tms::gen::random_box(n, 2, 8, seed);
        case 1: return tms::gen::random_lipschitz(n, 2, 8, seed * 31 + 1);
        default: return tms::gen::random_metric(n, 6, seed * 17 + 3);
    }
}

}  // namespace fixtures

#include "detail/scaled.hpp"

#include <algorithm>

namespace tms::detail {

namespace {

// Scaled magnitudes stay below this so that sums and doubling cannot
// overflow 64-bit arithmetic.
constexpr long kHeadroom = 1L << 60;

void collect(const TimedMetricSpace& s, std::vector<const Scalar*>& values) {
    const int n = s.size();
    for (int i = 0; i < n; ++i) {
        values.push_back(&s.tau(i));
        for (int j = 0; j < n; ++j) values.push_back(&s.dist(i, j));
    }
}

template <class Read>
PairData<double> build_double(const TimedMetricSpace& x, const TimedMetricSpace& y,
                              Read read) {
    PairData<double> d;
    d.n = x.size();
    d.m = y.size();
    d.dx.resize(static_cast<std::size_t>(d.n) * d.n);
    d.dy.resize(static_cast<std::size_t>(d.m) * d.m);
    d.tx.resize(d.n);
    d.ty.resize(d.m);
    for (int i = 0; i < d.n; ++i) {
        d.tx[i] = read(x.tau(i));
        for (int j = 0; j < d.n; ++j) d.dx[static_cast<std::size_t>(i) * d.n + j] = read(x.dist(i, j));
    }
    for (int i = 0; i < d.m; ++i) {
        d.ty[i] = read(y.tau(i));
        for (int j = 0; j < d.m; ++j) d.dy[static_cast<std::size_t>(i) * d.m + j] = read(y.dist(i, j));
    }
    return d;
}

PairData<Scalar> build_scalar(const TimedMetricSpace& x, const TimedMetricSpace& y) {
    PairData<Scalar> d;
    d.n = x.size();
    d.m = y.size();
    d.dx.resize(static_cast<std::size_t>(d.n) * d.n);
    d.dy.resize(static_cast<std::size_t>(d.m) * d.m);
    d.tx.resize(d.n);
    d.ty.resize(d.m);
    for (int i = 0; i < d.n; ++i) {
        d.tx[i] = x.tau(i);
        for (int j = 0; j < d.n; ++j) d.dx[static_cast<std::size_t>(i) * d.n + j] = x.dist(i, j);
    }
    for (int i = 0; i < d.m; ++i) {
        d.ty[i] = y.tau(i);
        for (int j = 0; j < d.m; ++j) d.dy[static_cast<std::size_t>(i) * d.m + j] = y.dist(i, j);
    }
    return d;
}

}  // namespace

AnyPairData make_pair_data(const TimedMetricSpace& x, const TimedMetricSpace& y) {
    if (!x.exact() || !y.exact())
        return build_double(x, y, [](const Scalar& s) { return s.to_double(); });

    std::vector<const Scalar*> values;
    collect(x, values);
    collect(y, values);
    mpz_class common(1);
    for (const Scalar* v : values) common = lcm(common, v->rat().get_den());
    if (!common.fits_slong_p()) return build_scalar(x, y);

    bool fits = true;
    auto scaled = [&](const Scalar& s) {
        mpz_class v = s.rat().get_num() * (common / s.rat().get_den());
        if (!v.fits_slong_p() || v > kHeadroom || v < -kHeadroom) fits = false;
        return fits ? static_cast<long long>(v.get_si()) : 0LL;
    };
    PairData<long long> d;
    d.n = x.size();
    d.m = y.size();
    d.den = static_cast<long long>(common.get_si());
    d.dx.resize(static_cast<std::size_t>(d.n) * d.n);
    d.dy.resize(static_cast<std::size_t>(d.m) * d.m);
    d.tx.resize(d.n);
    d.ty.resize(d.m);
    for (int i = 0; i < d.n && fits; ++i) {
        d.tx[i] = scaled(x.tau(i));
        for (int j = 0; j < d.n && fits; ++j)
            d.dx[static_cast<std::size_t>(i) * d.n + j] = scaled(x.dist(i, j));
    }
    for (int i = 0; i < d.m && fits; ++i) {
        d.ty[i] = scaled(y.tau(i));
        for (int j = 0; j < d.m && fits; ++j)
            d.dy[static_cast<std::size_t>(i) * d.m + j] = scaled(y.dist(i, j));
    }
    if (!fits) return build_scalar(x, y);
    return d;
}

std::vector<std::pair<int, int>> witness_pairs(const MinimalWitness& w) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(w.f.size() + w.g.size());
    for (std::size_t i = 0; i < w.f.size(); ++i)
        pairs.emplace_back(static_cast<int>(i), w.f[i]);
    for (std::size_t j = 0; j < w.g.size(); ++j)
        pairs.emplace_back(w.g[j], static_cast<int>(j));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

}  // namespace tms::detail

#include "tms/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace tms::gen {

namespace {

Matrix<Scalar> line_distances(const std::vector<Scalar>& xs) {
    const int n = static_cast<int>(xs.size());
    Matrix<Scalar> d(n, n, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = abs(xs[i] - xs[j]);
    return d;
}

std::vector<Scalar> envelope_tau(const Matrix<Scalar>& dist,
                                 const std::vector<Scalar>& anchors) {
    const int n = static_cast<int>(anchors.size());
    std::vector<Scalar> tau(n);
    for (int i = 0; i < n; ++i) {
        Scalar best = anchors[0] + dist(i, 0);
        for (int j = 1; j < n; ++j) best = min(best, anchors[j] + dist(i, j));
        tau[i] = std::move(best);
    }
    return tau;
}

}  // namespace

TimedMetricSpace zigzag(int j, bool literal) {
    if (j < 1) throw std::invalid_argument("zigzag needs j >= 1");
    std::vector<Scalar> xs, ys;
    for (int k = 0; k <= j; ++k) {
        xs.push_back(Scalar::rational(k, j));
        ys.push_back(Scalar(0));
        if (k < j) {
            xs.push_back(Scalar::rational(2 * k + 1, 2L * j));
            ys.push_back(literal ? Scalar(0) : Scalar::rational(1, 2L * j));
        }
    }
    const int n = static_cast<int>(xs.size());
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("(" + xs[i].str() + "," + ys[i].str() + ")");
    return TimedMetricSpace(MetricSpace(std::move(labels), line_distances(xs)), ys);
}

TimedMetricSpace chain(int n) {
    if (n < 1) throw std::invalid_argument("chain needs n >= 1");
    std::vector<Scalar> xs;
    for (int i = 0; i < n; ++i)
        xs.push_back(n == 1 ? Scalar(0) : Scalar::rational(i, n - 1));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return TimedMetricSpace(MetricSpace(std::move(labels), line_distances(xs)), xs);
}

TimedMetricSpace interval_grid(int segments) {
    if (segments < 1) throw std::invalid_argument("interval grid needs segments >= 1");
    std::vector<Scalar> xs;
    for (int i = 0; i <= segments; ++i) xs.push_back(Scalar::rational(i, segments));
    std::vector<std::string> labels;
    for (int i = 0; i <= segments; ++i) labels.push_back("x" + std::to_string(i));
    std::vector<Scalar> tau(xs.size(), Scalar(0));
    return TimedMetricSpace(MetricSpace(std::move(labels), line_distances(xs)),
                            std::move(tau));
}

MetricSpace cycle(int k, const Scalar& hop) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    if (!(hop > Scalar(0))) throw std::invalid_argument("cycle hop must be positive");
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("z" + std::to_string(i));
    Matrix<Scalar> d(k, k, Scalar(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int gap = i > j ? i - j : j - i;
            if (gap > k - gap) gap = k - gap;
            d(i, j) = Scalar(gap) * hop;
        }
    return MetricSpace(std::move(labels), std::move(d));
}

TimedMetricSpace max_product_grid(int steps, const MetricSpace& base) {
    if (steps < 1) throw std::invalid_argument("max_product_grid needs steps >= 1");
    std::vector<Scalar> samples;
    for (int i = 0; i <= steps; ++i) samples.push_back(Scalar::rational(i, steps));
    return max_product(std::move(samples), base);
}

namespace {

struct BoxCloud {
    std::vector<std::vector<Scalar>> coords;
    Matrix<Scalar> dist;
    std::vector<std::string> labels;
};

BoxCloud random_cloud(int n, int dim, long q, std::uint64_t seed) {
    if (n < 1 || dim < 1 || q < 1) throw std::invalid_argument("bad cloud parameters");
    std::mt19937_64 eng(seed);
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> raw;
    int attempts = 0;
    while (static_cast<int>(raw.size()) < n) {
        if (++attempts > 1000 * n)
            throw std::invalid_argument("cannot draw enough distinct points; enlarge the grid");
        std::vector<long> p(dim);
        for (int k = 0; k < dim; ++k) p[k] = static_cast<long>(eng() % (q + 1));
        if (seen.insert(p).second) raw.push_back(std::move(p));
    }
    BoxCloud cloud;
    cloud.coords.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < dim; ++k)
            cloud.coords[i].push_back(Scalar::rational(raw[i][k], q));
        cloud.labels.push_back("p" + std::to_string(i));
    }
    cloud.dist = Matrix<Scalar>(n, n, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Scalar best(0);
            for (int k = 0; k < dim; ++k)
                best = max(best, abs(cloud.coords[i][k] - cloud.coords[j][k]));
            cloud.dist(i, j) = best;
            cloud.dist(j, i) = std::move(best);
        }
    return cloud;
}

}  // namespace

TimedMetricSpace random_box(int n, int dim, long denominator, std::uint64_t seed) {
    BoxCloud cloud = random_cloud(n, dim, denominator, seed);
    std::vector<Scalar> tau(n);
    for (int i = 0; i < n; ++i) tau[i] = cloud.dist(0, i);
    return TimedMetricSpace(MetricSpace(std::move(cloud.labels), std::move(cloud.dist)),
                            std::move(tau));
}

TimedMetricSpace random_lipschitz(int n, int dim, long denominator, std::uint64_t seed) {
    BoxCloud cloud = random_cloud(n, dim, denominator, seed);
    std::mt19937_64 eng(seed ^ 0x5bd1e995ULL);
    std::vector<Scalar> anchors(n);
    for (int i = 0; i < n; ++i)
        anchors[i] = Scalar::rational(static_cast<long>(eng() % (denominator + 1)), denominator);
    std::vector<Scalar> tau = envelope_tau(cloud.dist, anchors);
    return TimedMetricSpace(MetricSpace(std::move(cloud.labels), std::move(cloud.dist)),
                            std::move(tau));
}

TimedMetricSpace random_metric(int n, long denominator, std::uint64_t seed) {
    if (n < 1 || denominator < 1) throw std::invalid_argument("bad parameters");
    std::mt19937_64 eng(seed);
    Matrix<Scalar> d(n, n, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long v = 1 + static_cast<long>(eng() % (2 * denominator));
            d(i, j) = Scalar::rational(v, denominator);
            d(j, i) = d(i, j);
        }
    // min-plus closure repairs the triangle inequality
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d(i, j) = min(d(i, j), d(i, k) + d(k, j));
    std::vector<Scalar> anchors(n);
    for (int i = 0; i < n; ++i)
        anchors[i] = Scalar::rational(static_cast<long>(eng() % (denominator + 1)), denominator);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<Scalar> tau = envelope_tau(d, anchors);
    return TimedMetricSpace(MetricSpace(std::move(labels), std::move(d)), std::move(tau));
}

}  // namespace tms::gen

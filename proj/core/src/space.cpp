#include "tms/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tms {

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Symmetry: return "symmetry";
        case Axiom::ZeroDiagonal: return "zero-diagonal";
        case Axiom::Positivity: return "positivity";
        case Axiom::Triangle: return "triangle";
        case Axiom::Lipschitz: return "lipschitz";
        case Axiom::TimeNonnegative: return "time-nonnegative";
        case Axiom::Reflexivity: return "reflexivity";
        case Axiom::Antisymmetry: return "antisymmetry";
        case Axiom::Transitivity: return "transitivity";
        case Axiom::ChainRealizer: return "chain-realizer";
        case Axiom::FlipSeparation: return "flip-separation";
        case Axiom::MetricRestriction: return "metric-restriction";
        case Axiom::DistancePreservation: return "distance-preservation";
        case Axiom::TimePreservation: return "time-preservation";
        case Axiom::NetCovering: return "net-covering";
        case Axiom::NetNesting: return "net-nesting";
        case Axiom::EmbeddingBound: return "embedding-bound";
        case Axiom::EmbeddingContinuity: return "embedding-continuity";
        case Axiom::EmbeddingIsometry: return "embedding-isometry";
    }
    return "unknown";
}

void ValidationReport::add(Axiom axiom, std::vector<int> where, std::string detail) {
    items_.push_back(Violation{axiom, std::move(where), std::move(detail)});
}

std::string ValidationReport::str() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : items_) {
        os << axiom_name(v.axiom) << " at (";
        for (std::size_t k = 0; k < v.where.size(); ++k) {
            if (k) os << ",";
            os << v.where[k];
        }
        os << ")";
        if (!v.detail.empty()) os << ": " << v.detail;
        os << "\n";
    }
    return os.str();
}

NumericPolicy NumericPolicy::float_mode(double tol) {
    if (!(tol > 0)) throw std::invalid_argument("float mode needs a positive tolerance");
    return {false, Scalar::real(tol)};
}

MetricSpace::MetricSpace(std::vector<std::string> labels, Matrix<Scalar> dist,
                         NumericPolicy policy)
    : labels_(std::move(labels)), dist_(std::move(dist)), policy_(std::move(policy)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw std::invalid_argument("a space needs at least one point");
    if (dist_.rows() != n || dist_.cols() != n)
        throw std::invalid_argument("distance matrix shape does not match the label count");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) throw std::invalid_argument("duplicate point labels");
    diam_ = Scalar(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) diam_ = max(diam_, dist_(i, j));
}

bool MetricSpace::eq(const Scalar& a, const Scalar& b) const {
    if (policy_.exact) return a == b;
    return abs(a - b) <= policy_.tolerance;
}

bool MetricSpace::le(const Scalar& a, const Scalar& b) const {
    if (policy_.exact) return a <= b;
    return a <= b + policy_.tolerance;
}

bool MetricSpace::lt(const Scalar& a, const Scalar& b) const {
    if (policy_.exact) return a < b;
    return a + policy_.tolerance < b;
}

bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.labels_ == b.labels_ && a.dist_ == b.dist_ &&
           a.policy_.exact == b.policy_.exact &&
           a.policy_.tolerance == b.policy_.tolerance;
}

TimedMetricSpace::TimedMetricSpace(MetricSpace metric, std::vector<Scalar> tau)
    : metric_(std::move(metric)), tau_(std::move(tau)) {
    if (static_cast<int>(tau_.size()) != metric_.size())
        throw std::invalid_argument("time vector length does not match the point count");
    tau_max_ = tau_[0];
    for (const auto& t : tau_) tau_max_ = max(tau_max_, t);
}

bool operator==(const TimedMetricSpace& a, const TimedMetricSpace& b) {
    return a.metric_ == b.metric_ && a.tau_ == b.tau_;
}

ValidationReport validate_metric(const MetricSpace& s) {
    ValidationReport report;
    const int n = s.size();
    const Scalar zero(0);
    for (int i = 0; i < n; ++i) {
        if (!s.eq(s.dist(i, i), zero))
            report.add(Axiom::ZeroDiagonal, {i}, "d(" + std::to_string(i) + "," + std::to_string(i) + ") = " + s.dist(i, i).str());
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!s.eq(s.dist(i, j), s.dist(j, i)))
                report.add(Axiom::Symmetry, {i, j},
                           s.dist(i, j).str() + " vs " + s.dist(j, i).str());
            if (!s.lt(zero, s.dist(i, j)))
                report.add(Axiom::Positivity, {i, j}, "d = " + s.dist(i, j).str());
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (!s.le(s.dist(i, k), s.dist(i, j) + s.dist(j, k)))
                    report.add(Axiom::Triangle, {i, j, k},
                               s.dist(i, k).str() + " > " + s.dist(i, j).str() + " + " +
                                   s.dist(j, k).str());
            }
        }
    return report;
}

ValidationReport validate(const TimedMetricSpace& s) {
    ValidationReport report = validate_metric(s.metric());
    const int n = s.size();
    const Scalar zero(0);
    for (int i = 0; i < n; ++i) {
        if (!s.le(zero, s.tau(i)))
            report.add(Axiom::TimeNonnegative, {i}, "tau = " + s.tau(i).str());
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!s.le(abs(s.tau(i) - s.tau(j)), s.dist(i, j)))
                report.add(Axiom::Lipschitz, {i, j},
                           "|dtau| = " + abs(s.tau(i) - s.tau(j)).str() + " > d = " +
                               s.dist(i, j).str());
        }
    return report;
}

void require_valid(const TimedMetricSpace& s) {
    ValidationReport report = validate(s);
    if (!report.ok()) {
        const Violation& v = report.items().front();
        std::ostringstream os;
        os << "invalid timed-metric space: " << axiom_name(v.axiom) << " violated";
        if (!v.detail.empty()) os << " (" << v.detail << ")";
        throw std::invalid_argument(os.str());
    }
}

TimedMetricSpace max_product(std::vector<Scalar> time_samples, const MetricSpace& base) {
    if (time_samples.empty()) throw std::invalid_argument("empty time sample list");
    for (const auto& t : time_samples)
        if (t < Scalar(0)) throw std::invalid_argument("negative time sample " + t.str());
    ValidationReport base_report = validate_metric(base);
    if (!base_report.ok())
        throw std::invalid_argument("max_product base is not a metric space: " +
                                    base_report.str());
    std::sort(time_samples.begin(), time_samples.end());
    time_samples.erase(std::unique(time_samples.begin(), time_samples.end()),
                       time_samples.end());

    const int steps = static_cast<int>(time_samples.size());
    const int nz = base.size();
    const int n = steps * nz;
    std::vector<std::string> labels;
    labels.reserve(n);
    std::vector<Scalar> tau;
    tau.reserve(n);
    for (int a = 0; a < steps; ++a)
        for (int z = 0; z < nz; ++z) {
            labels.push_back("(" + time_samples[a].str() + "," + base.label(z) + ")");
            tau.push_back(time_samples[a]);
        }
    Matrix<Scalar> dist(n, n, Scalar(0));
    for (int a = 0; a < steps; ++a)
        for (int z = 0; z < nz; ++z)
            for (int b = 0; b < steps; ++b)
                for (int w = 0; w < nz; ++w) {
                    dist(a * nz + z, b * nz + w) =
                        max(abs(time_samples[a] - time_samples[b]), base.dist(z, w));
                }
    TimedMetricSpace result(MetricSpace(std::move(labels), std::move(dist), base.policy()),
                            std::move(tau));
    return result;
}

}  // namespace tms

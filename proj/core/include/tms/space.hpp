#pragma once

#include <string>
#include <vector>

#include "tms/matrix.hpp"
#include "tms/scalar.hpp"

namespace tms {

/// Axioms and derived properties that validation can report against.
enum class Axiom {
    Symmetry,
    ZeroDiagonal,
    Positivity,
    Triangle,
    Lipschitz,
    TimeNonnegative,
    Reflexivity,
    Antisymmetry,
    Transitivity,
    ChainRealizer,
    FlipSeparation,
    MetricRestriction,
    DistancePreservation,
    TimePreservation,
    NetCovering,
    NetNesting,
    EmbeddingBound,
    EmbeddingContinuity,
    EmbeddingIsometry,
};

const char* axiom_name(Axiom a);

struct Violation {
    Axiom axiom;
    std::vector<int> where;  // witnessing indices, meaning depends on the axiom
    std::string detail;
};

class ValidationReport {
public:
    bool ok() const { return items_.empty(); }
    void add(Axiom axiom, std::vector<int> where, std::string detail = {});
    const std::vector<Violation>& items() const { return items_; }
    std::string str() const;

private:
    std::vector<Violation> items_;
};

/// Whether a space uses exact rationals or doubles, and in the latter case
/// the absolute tolerance used by every equality predicate.
struct NumericPolicy {
    bool exact = true;
    Scalar tolerance = Scalar(0);

    static NumericPolicy exact_mode() { return {true, Scalar(0)}; }
    static NumericPolicy float_mode(double tol = 1e-9);
};

/// Finite metric space candidate: labelled points and a square distance
/// table. Construction enforces shape only; the metric axioms are checked by
/// validate_metric so that invalid data can be loaded and reported on.
class MetricSpace {
public:
    MetricSpace(std::vector<std::string> labels, Matrix<Scalar> dist,
                NumericPolicy policy = NumericPolicy::exact_mode());

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Scalar& dist(int i, int j) const { return dist_(i, j); }
    const Matrix<Scalar>& dist_matrix() const { return dist_; }
    const Scalar& diam() const { return diam_; }

    bool exact() const { return policy_.exact; }
    const Scalar& tolerance() const { return policy_.tolerance; }
    const NumericPolicy& policy() const { return policy_; }

    /// |a - b| <= tolerance (exact equality in rational mode).
    bool eq(const Scalar& a, const Scalar& b) const;
    /// a <= b up to tolerance.
    bool le(const Scalar& a, const Scalar& b) const;
    /// a < b by more than the tolerance.
    bool lt(const Scalar& a, const Scalar& b) const;

    friend bool operator==(const MetricSpace& a, const MetricSpace& b);

private:
    std::vector<std::string> labels_;
    Matrix<Scalar> dist_;
    NumericPolicy policy_;
    Scalar diam_;
};

/// Metric space with a nonnegative 1-Lipschitz time function.
class TimedMetricSpace {
public:
    TimedMetricSpace(MetricSpace metric, std::vector<Scalar> tau);

    const MetricSpace& metric() const { return metric_; }
    int size() const { return metric_.size(); }
    const std::string& label(int i) const { return metric_.label(i); }
    const Scalar& dist(int i, int j) const { return metric_.dist(i, j); }
    const Scalar& tau(int i) const { return tau_[i]; }
    const std::vector<Scalar>& tau() const { return tau_; }
    const Scalar& tau_max() const { return tau_max_; }
    const Scalar& diam() const { return metric_.diam(); }

    bool exact() const { return metric_.exact(); }
    const Scalar& tolerance() const { return metric_.tolerance(); }
    bool eq(const Scalar& a, const Scalar& b) const { return metric_.eq(a, b); }
    bool le(const Scalar& a, const Scalar& b) const { return metric_.le(a, b); }
    bool lt(const Scalar& a, const Scalar& b) const { return metric_.lt(a, b); }

    friend bool operator==(const TimedMetricSpace& a, const TimedMetricSpace& b);

private:
    MetricSpace metric_;
    std::vector<Scalar> tau_;
    Scalar tau_max_;
};

/// Checks symmetry, zero diagonal, strict positivity off the diagonal and
/// the triangle inequality. Empty report iff all hold.
ValidationReport validate_metric(const MetricSpace& space);

/// validate_metric plus 1-Lipschitzness and nonnegativity of the time
/// function. Empty report iff the input is a timed-metric space.
ValidationReport validate(const TimedMetricSpace& space);

/// Throws std::invalid_argument describing the first violation when the
/// space fails validate(). Operations with a validity precondition use this.
void require_valid(const TimedMetricSpace& space);

/// Max-product of a finite time grid with a base metric space: points are
/// (t, z) pairs, distance max(|t1 - t2|, d_Z), time the first coordinate.
/// Samples are sorted and deduplicated; negative samples are rejected.
TimedMetricSpace max_product(std::vector<Scalar> time_samples, const MetricSpace& base);

}  // namespace tms

#include <doctest.h>

#include "support/fixtures.hpp"
#include "tms/bounds.hpp"
#include "tms/causal.hpp"
#include "tms/generators.hpp"
#include "tms/null_distance.hpp"

using namespace tms;

namespace {

TimedMetricSpace float_two_points(double d, double t0, double t1, double tol = 1e-9) {
    Matrix<Scalar> dist(2, 2, Scalar::real(0));
    dist(0, 1) = dist(1, 0) = Scalar::real(d);
    return TimedMetricSpace(
        MetricSpace({"a", "b"}, std::move(dist), NumericPolicy::float_mode(tol)),
        {Scalar::real(t0), Scalar::real(t1)});
}

TimedMetricSpace as_float(const TimedMetricSpace& s, double tol = 1e-9) {
    const int n = s.size();
    Matrix<Scalar> dist(n, n, Scalar::real(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dist(i, j) = Scalar::real(s.dist(i, j).to_double());
    std::vector<Scalar> tau;
    for (int i = 0; i < n; ++i) tau.push_back(Scalar::real(s.tau(i).to_double()));
    return TimedMetricSpace(
        MetricSpace(s.metric().labels(), std::move(dist), NumericPolicy::float_mode(tol)),
        std::move(tau));
}

}  // namespace

TEST_SUITE("float") {

TEST_CASE("the causal equality absorbs measurement noise within the tolerance") {
    auto noisy = float_two_points(1.0, 0.0, 1.0 - 1e-12);
    CHECK(validate(noisy).ok());
    CausalRelation rel = causal_matrix(noisy);
    CHECK(rel.rel(0, 1));

    auto off = float_two_points(1.0, 0.0, 0.5);
    CHECK_FALSE(causal_matrix(off).related(0, 1));
}

TEST_CASE("rational mode has no tolerance") {
    auto strict = fixtures::two_points("1", "0", "999999999/1000000000");
    CHECK_FALSE(causal_matrix(strict).related(0, 1));
}

TEST_CASE("null distance and nullity verdicts work on float spaces") {
    auto z = as_float(gen::zigzag(3));
    CHECK(validate(z).ok());
    CHECK(is_causally_null(z).causally_null);
}

TEST_CASE("bounds run on the double kernel with the sandwich intact") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto x = as_float(fixtures::random_space(seed * 3 + 2, 4));
        auto y = as_float(fixtures::random_space(seed * 3 + 8, 4));
        BoundCertificate cert = certify_bounds(x, y);
        CHECK_FALSE(cert.lower.exact());
        double fudge = 1e-9;
        CHECK(cert.lower.to_double() <= cert.upper.to_double() + fudge);
        CHECK(cert.upper.to_double() <= 2 * cert.lower.to_double() + fudge);
    }
}

TEST_CASE("validation tolerates sub-tolerance asymmetry") {
    Matrix<Scalar> dist(2, 2, Scalar::real(0));
    dist(0, 1) = Scalar::real(1.0);
    dist(1, 0) = Scalar::real(1.0 + 1e-12);
    TimedMetricSpace s(
        MetricSpace({"a", "b"}, std::move(dist), NumericPolicy::float_mode(1e-9)),
        {Scalar::real(0), Scalar::real(0)});
    CHECK(validate(s).ok());
}

}  // TEST_SUITE

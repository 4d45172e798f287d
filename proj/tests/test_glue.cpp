#include <doctest.h>

#include "support/fixtures.hpp"
#include "tms/bounds.hpp"
#include "tms/gluing.hpp"

using namespace tms;
using fixtures::q;

namespace {

FrechetEmbedding full_timed(const TimedMetricSpace& s) {
    std::vector<int> full(s.size());
    for (int i = 0; i < s.size(); ++i) full[i] = i;
    return frechet_map(s, full, true);
}

}  // namespace

TEST_SUITE("glue") {

TEST_CASE("identity gluing identifies every copy") {
    auto s = fixtures::random_space(77, 4);
    FrechetEmbedding e = full_timed(s);
    GluedSpace g = glue(s, s, s, e, e, e, e);
    for (int x = 0; x < s.size(); ++x)
        CHECK(g.product_distance(s.tau(x), g.x2_left_node(x), s.tau(x),
                                 g.x2_right_node(x)) == Scalar(0));
    CHECK(g.psi_hausdorff() == Scalar(0));
    CHECK(g.verify().ok());
}

TEST_CASE("one-point spaces glue with exact additivity") {
    auto x1 = fixtures::one_point("0");
    auto x2 = fixtures::one_point("2");
    auto x3 = fixtures::one_point("5");
    CHECK(tgh_lower_bound(x1, x2, LowerBoundMode::Exhaustive).value == Scalar(2));
    CHECK(tgh_lower_bound(x2, x3, LowerBoundMode::Exhaustive).value == Scalar(3));
    CHECK(tgh_lower_bound(x1, x3, LowerBoundMode::Exhaustive).value == Scalar(5));
    TriangleReport report = triangle_check(x1, x2, x3);
    CHECK(report.u12 == Scalar(2));
    CHECK(report.u23 == Scalar(3));
    CHECK(report.u13 == Scalar(5));
    CHECK(report.slack == Scalar(0));
    CHECK(report.holds);
    CHECK(report.glued_checks.ok());
}

TEST_CASE("the slice metric keeps its restrictions and axioms") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto x1 = fixtures::random_space(seed * 3 + 11, 4);
        auto x2 = fixtures::random_space(seed * 3 + 12, 4);
        auto x3 = fixtures::random_space(seed * 3 + 13, 4);
        UpperBound u12 = tgh_upper_bound(x1, x2, UpperBoundMode::FromCorrespondence);
        UpperBound u23 = tgh_upper_bound(x2, x3, UpperBoundMode::FromCorrespondence);
        GluedSpace g = glue(x1, x2, x3, u12.witness_x, u12.witness_y, u23.witness_x,
                            u23.witness_y);
        CHECK(g.verify().ok());
        CHECK(validate_metric(g.quotient()).ok());
    }
}

TEST_CASE("triangle bound holds on random triples without slack") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto x1 = fixtures::random_space(seed * 5 + 21, 4);
        auto x2 = fixtures::random_space(seed * 5 + 22, 4);
        auto x3 = fixtures::random_space(seed * 5 + 23, 4);
        TriangleReport report = triangle_check(x1, x2, x3);
        CHECK(report.slack == Scalar(0));
        CHECK(report.holds);
        CHECK(report.u13 <= report.u12 + report.u23);
        CHECK(report.glued_checks.ok());
    }
}

TEST_CASE("equal outer spaces: zero direct bound regardless of the middle") {
    auto x = fixtures::random_space(91, 3);
    auto middle = fixtures::random_space(92, 3);
    TriangleReport report = triangle_check(x, middle, x);
    CHECK(report.u13_direct == Scalar(0));
    CHECK(report.u13 <= report.u12 + report.u23);
    CHECK(report.holds);
}

TEST_CASE("tampered embeddings are rejected with a witness") {
    auto s = fixtures::two_points("1", "0", "0");
    FrechetEmbedding good = full_timed(s);
    Matrix<Scalar> rows(2, 3, Scalar(0));  // collapses the two points
    FrechetEmbedding bad({0, 1}, true, std::move(rows));
    CHECK_THROWS_AS(glue(s, s, s, good, good, bad, good), std::invalid_argument);
}

}  // TEST_SUITE

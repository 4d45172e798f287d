#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tms/causal.hpp"
#include "tms/covering.hpp"
#include "tms/generators.hpp"
#include "tms/space.hpp"

using namespace tms;
using fixtures::make_space;
using fixtures::q;

TEST_SUITE("core") {

TEST_CASE("one-point space is the smallest valid space") {
    CHECK(validate(fixtures::one_point()).ok());
}

TEST_CASE("lipschitz violation is reported with its witness") {
    auto s = fixtures::two_points("1", "0", "2");
    ValidationReport report = validate(s);
    REQUIRE_FALSE(report.ok());
    CHECK(report.items().front().axiom == Axiom::Lipschitz);
    CHECK(report.items().front().where == std::vector<int>{0, 1});
}

TEST_CASE("triangle violation is reported with its witnesses") {
    auto s = make_space({{"0", "1", "5"}, {"1", "0", "1"}, {"5", "1", "0"}},
                        {"0", "0", "0"});
    ValidationReport report = validate(s);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.items()) found = found || v.axiom == Axiom::Triangle;
    CHECK(found);
}

TEST_CASE("asymmetry, nonzero diagonal, zero off-diagonal and negative time") {
    auto s = make_space({{"0", "1"}, {"2", "0"}}, {"0", "0"});
    ValidationReport asym = validate(s);
    bool symmetry = false;
    for (const auto& v : asym.items()) symmetry = symmetry || v.axiom == Axiom::Symmetry;
    CHECK(symmetry);

    auto zero_gap = make_space({{"0", "0"}, {"0", "0"}}, {"0", "0"});
    ValidationReport zero = validate(zero_gap);
    bool positivity = false;
    for (const auto& v : zero.items()) positivity = positivity || v.axiom == Axiom::Positivity;
    CHECK(positivity);

    auto negative = make_space({{"0"}}, {"-1"});
    CHECK(validate(negative).items().front().axiom == Axiom::TimeNonnegative);
}

TEST_CASE("structural errors are distinct from axiom violations") {
    Matrix<Scalar> wrong(2, 3, Scalar(0));
    CHECK_THROWS_AS(MetricSpace({"a", "b"}, wrong), std::invalid_argument);
    Matrix<Scalar> ok(2, 2, Scalar(0));
    CHECK_THROWS_AS(MetricSpace({"a", "a"}, ok), std::invalid_argument);
    CHECK_THROWS_AS(TimedMetricSpace(MetricSpace({"a", "b"}, ok), {Scalar(0)}),
                    std::invalid_argument);
}

TEST_CASE("max product evaluates the distance formula") {
    MetricSpace base({"z1", "z2"}, [] {
        Matrix<Scalar> d(2, 2, Scalar(0));
        d(0, 1) = d(1, 0) = Scalar(1);
        return d;
    }());
    auto prod = max_product({Scalar(1), Scalar(3)}, base);
    REQUIRE(prod.size() == 4);
    // points ordered time-major: (1,z1) (1,z2) (3,z1) (3,z2)
    CHECK(prod.dist(0, 3) == Scalar(2));  // max(|1-3|, 1)
    CHECK(prod.dist(0, 0) == Scalar(0));
    CHECK(prod.dist(0, 1) == Scalar(1));
    CHECK(validate(prod).ok());
    SUBCASE("time is the first coordinate") {
        CHECK(prod.tau(0) == Scalar(1));
        CHECK(prod.tau(2) == Scalar(3));
    }
    SUBCASE("negative samples are rejected") {
        CHECK_THROWS_AS(max_product({Scalar(-1)}, base), std::invalid_argument);
    }
}

TEST_CASE("causal matrix matches the defining equality") {
    SUBCASE("reflexive everywhere") {
        auto s = fixtures::random_space(11, 6);
        CausalRelation rel = causal_matrix(s);
        for (int i = 0; i < s.size(); ++i) CHECK(rel.rel(i, i));
    }
    SUBCASE("future step in a product over one point") {
        MetricSpace pt({"z"}, Matrix<Scalar>(1, 1, Scalar(0)));
        auto prod = max_product({Scalar(0), Scalar(1)}, pt);
        CausalRelation rel = causal_matrix(prod);
        CHECK(rel.rel(0, 1));       // (1,z) in J^+((0,z))
        CHECK_FALSE(rel.rel(1, 0));
    }
    SUBCASE("strict inequality means unrelated") {
        auto s = fixtures::two_points("1", "0", "1/2");
        CausalRelation rel = causal_matrix(s);
        CHECK_FALSE(rel.rel(0, 1));
        CHECK_FALSE(rel.rel(1, 0));
        CHECK_FALSE(rel.related(0, 1));
    }
    SUBCASE("invalid spaces are refused") {
        CHECK_THROWS_AS(causal_matrix(fixtures::two_points("1", "0", "2")),
                        std::invalid_argument);
    }
}

TEST_CASE("partial order checks") {
    SUBCASE("derived relations pass on random spaces") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto s = fixtures::random_space(seed, 8);
            CHECK(check_partial_order(causal_matrix(s)).ok());
        }
    }
    SUBCASE("one-point space") {
        CHECK(check_partial_order(causal_matrix(fixtures::one_point())).ok());
    }
    SUBCASE("hand-built non-transitive relation is caught") {
        CausalRelation rel(3);
        for (int i = 0; i < 3; ++i) rel.set(i, i, true);
        rel.set(0, 1, true);
        rel.set(1, 2, true);  // 0->2 missing
        ValidationReport report = check_partial_order(rel);
        REQUIRE_FALSE(report.ok());
        CHECK(report.items().front().axiom == Axiom::Transitivity);
        CHECK(report.items().front().where == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("chain additivity along causal chains") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto s = fixtures::random_space(seed * 13 + 1, 7);
        CausalRelation rel = causal_matrix(s);
        for (int p = 0; p < s.size(); ++p)
            for (int r = 0; r < s.size(); ++r)
                for (int mid = 0; mid < s.size(); ++mid)
                    if (rel.rel(p, mid) && rel.rel(mid, r))
                        CHECK(s.dist(p, r) == s.dist(p, mid) + s.dist(mid, r));
    }
}

TEST_CASE("greedy covering") {
    SUBCASE("one ball suffices when the radius beats the diameter") {
        auto s = fixtures::random_space(5, 6);
        CoveringResult cover = covering_number(s, s.diam() + Scalar(1));
        CHECK(cover.count == 1);
    }
    SUBCASE("one-point space") {
        CHECK(covering_number(fixtures::one_point(), q("1/10")).count == 1);
    }
    SUBCASE("five equispaced points at radius 3/10") {
        auto s = gen::interval_grid(4);  // 0, 1/4, ..., 1
        CoveringResult greedy = covering_number(s, q("3/10"));
        CHECK(greedy.count <= 3);
        CHECK(oracle::min_cover_size(s.metric(), q("3/10")) == 2);
        // greedy covers: every point strictly within the radius of a center
        for (int x = 0; x < s.size(); ++x) {
            bool covered = false;
            for (int c : greedy.centers) covered = covered || s.dist(x, c) < q("3/10");
            CHECK(covered);
        }
    }
    SUBCASE("nonpositive radius is refused") {
        CHECK_THROWS_AS(covering_number(fixtures::one_point(), Scalar(0)),
                        std::invalid_argument);
    }
}

TEST_CASE("max product over random bases stays valid with first-coordinate time") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto base_space = fixtures::random_space(seed * 3 + 2, 4);
        auto prod = max_product({Scalar(0), q("1/2"), Scalar(1)}, base_space.metric());
        CHECK(validate(prod).ok());
        for (int a = 0; a < 3; ++a)
            for (int z = 0; z < base_space.size(); ++z) {
                Scalar expected = a == 0 ? Scalar(0) : (a == 1 ? q("1/2") : Scalar(1));
                CHECK(prod.tau(a * base_space.size() + z) == expected);
            }
    }
}

}  // TEST_SUITE

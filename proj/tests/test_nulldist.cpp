#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tms/errors.hpp"
#include "tms/generators.hpp"
#include "tms/null_distance.hpp"

using namespace tms;
using fixtures::q;

TEST_SUITE("nulldist") {

TEST_CASE("null distance matches the shortest-path oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto s = fixtures::random_space(seed * 9 + 1, 8);
        NullDistanceResult nd = null_distance(s);
        auto expected = oracle::fw_null_distance(s);
        for (int i = 0; i < s.size(); ++i)
            for (int j = 0; j < s.size(); ++j) CHECK(nd.dhat(i, j) == expected(i, j));
    }
}

TEST_CASE("a monotone chain reproduces its distances") {
    auto s = gen::chain(3);
    NullDistanceResult nd = null_distance(s);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            REQUIRE_FALSE(nd.dhat(i, j).infinite());
            CHECK(nd.dhat(i, j).finite() == s.dist(i, j));
        }
}

TEST_CASE("unrelated points are infinitely far") {
    auto s = fixtures::two_points("1", "0", "1/2");
    NullDistanceResult nd = null_distance(s);
    CHECK(nd.dhat(0, 1).infinite());
    CHECK(nd.chain(0, 1).empty());
}

TEST_CASE("dhat dominates d and keeps tau 1-Lipschitz") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto s = fixtures::random_space(seed * 4 + 3, 8);
        NullDistanceResult nd = null_distance(s);
        for (int i = 0; i < s.size(); ++i)
            for (int j = 0; j < s.size(); ++j) {
                const ExtScalar& v = nd.dhat(i, j);
                if (v.infinite()) continue;
                CHECK(v.finite() >= s.dist(i, j));
                CHECK(abs(s.tau(i) - s.tau(j)) <= v.finite());
            }
    }
}

TEST_CASE("dhat is an extended distance, finite exactly within components") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto s = fixtures::random_space(seed * 12 + 1, 8);
        NullDistanceResult nd = null_distance(s);
        Components comp = chain_connectivity(s);
        const int n = s.size();
        for (int i = 0; i < n; ++i) {
            CHECK(nd.dhat(i, i) == ExtScalar(Scalar(0)));
            for (int j = 0; j < n; ++j) {
                CHECK(nd.dhat(i, j) == nd.dhat(j, i));
                CHECK(nd.dhat(i, j).infinite() == (comp.id[i] != comp.id[j]));
                for (int k = 0; k < n; ++k)
                    if (!nd.dhat(i, k).infinite() && !nd.dhat(k, j).infinite())
                        CHECK(nd.dhat(i, j) <= nd.dhat(i, k) + nd.dhat(k, j));
            }
        }
    }
}

TEST_CASE("causally null verdicts") {
    SUBCASE("one-point space") {
        CHECK(is_causally_null(fixtures::one_point()).causally_null);
    }
    SUBCASE("zigzag spaces are causally null for every j") {
        for (int j = 1; j <= 8; ++j) {
            auto z = gen::zigzag(j);
            CHECK(validate(z).ok());
            CHECK(is_causally_null(z).causally_null);
        }
    }
    SUBCASE("the literal coordinates are not causally null") {
        auto z = gen::zigzag(3, /*literal=*/true);
        CHECK(validate(z).ok());
        auto check = is_causally_null(z);
        CHECK_FALSE(check.causally_null);
        CHECK(null_distance(z).dhat(check.witness_i, check.witness_j).infinite());
    }
    SUBCASE("unrelated pair reports the infinite witness") {
        auto check = is_causally_null(fixtures::two_points("1", "0", "1/2"));
        CHECK_FALSE(check.causally_null);
        CHECK(check.witness_i == 0);
        CHECK(check.witness_j == 1);
    }
}

TEST_CASE("witness chains alternate and realize dhat") {
    auto z = gen::zigzag(3);
    NullDistanceResult nd = null_distance(z);
    for (int i = 0; i < z.size(); ++i)
        for (int j = 0; j < z.size(); ++j) {
            if (i == j) continue;
            std::vector<int> chain = nd.chain(i, j);
            REQUIRE_FALSE(chain.empty());
            CHECK(chain.front() == i);
            CHECK(chain.back() == j);
            Scalar total(0);
            for (std::size_t k = 1; k < chain.size(); ++k)
                total += abs(z.tau(chain[k - 1]) - z.tau(chain[k]));
            CHECK(total == nd.dhat(i, j).finite());
        }
}

TEST_CASE("null completion") {
    SUBCASE("causally null spaces are fixed points") {
        auto z = gen::zigzag(2);
        CHECK(null_completion(z) == z);
    }
    SUBCASE("chain-connected spaces complete and stay idempotent") {
        int exercised = 0;
        for (std::uint64_t seed = 0; seed < 60 && exercised < 12; ++seed) {
            auto s = fixtures::random_space(seed * 6 + 5, 7);
            if (chain_connectivity(s).count != 1) continue;
            ++exercised;
            TimedMetricSpace completed = null_completion(s);
            CHECK(validate(completed).ok());
            NullDistanceResult again = null_distance(completed);
            for (int i = 0; i < s.size(); ++i)
                for (int j = 0; j < s.size(); ++j) {
                    REQUIRE_FALSE(again.dhat(i, j).infinite());
                    CHECK(again.dhat(i, j).finite() == completed.dist(i, j));
                    CHECK(completed.dist(i, j) >= s.dist(i, j));
                }
            // causal structures agree
            CausalRelation before = causal_matrix(s);
            CausalRelation after = causal_matrix(completed);
            for (int i = 0; i < s.size(); ++i)
                for (int j = 0; j < s.size(); ++j) CHECK(before.rel(i, j) == after.rel(i, j));
        }
        CHECK(exercised > 0);
    }
    SUBCASE("disconnected spaces are refused with a witness") {
        CHECK_THROWS_AS(null_completion(fixtures::two_points("1", "0", "1/2")), Refusal);
    }
}

TEST_CASE("chain connectivity") {
    SUBCASE("a chain is one component") {
        CHECK(chain_connectivity(gen::chain(5)).count == 1);
    }
    SUBCASE("a flat grid is all singletons") {
        auto grid = gen::interval_grid(6);
        Components comp = chain_connectivity(grid);
        CHECK(comp.count == grid.size());
    }
    SUBCASE("two far-apart chains form two components") {
        auto s = fixtures::make_space(
            {{"0", "1/2", "1", "10", "21/2", "11"},
             {"1/2", "0", "1/2", "19/2", "10", "21/2"},
             {"1", "1/2", "0", "9", "19/2", "10"},
             {"10", "19/2", "9", "0", "1/2", "1"},
             {"21/2", "10", "19/2", "1/2", "0", "1/2"},
             {"11", "21/2", "10", "1", "1/2", "0"}},
            {"0", "1/2", "1", "0", "1/2", "1"});
        REQUIRE(validate(s).ok());
        Components comp = chain_connectivity(s);
        CHECK(comp.count == 2);
        CHECK(comp.id[0] == comp.id[2]);
        CHECK(comp.id[3] == comp.id[5]);
        CHECK(comp.id[0] != comp.id[3]);
    }
}

TEST_CASE("chain realizers") {
    SUBCASE("monotone chains realize their endpoints") {
        auto s = gen::chain(5);
        CausalChain chain({0, 1, 2, 3, 4}, s);
        CHECK(chain.monotone());
        CHECK(check_chain_realizer(chain, s).ok());
    }
    SUBCASE("length-one chains are trivial realizers") {
        auto s = fixtures::one_point();
        CHECK(check_chain_realizer(CausalChain({0}, s), s).ok());
    }
    SUBCASE("an up-down zigzag separates across its flip") {
        // apex at (1/2, 1/2); endpoints at height 0, distance 1 apart
        auto s = fixtures::make_space(
            {{"0", "1/2", "1"}, {"1/2", "0", "1/2"}, {"1", "1/2", "0"}},
            {"0", "1/2", "0"});
        REQUIRE(validate(s).ok());
        CausalChain chain({0, 1, 2}, s);
        CHECK_FALSE(chain.monotone());
        CHECK(check_chain_realizer(chain, s).ok());
    }
    SUBCASE("non-causal consecutive points are rejected") {
        auto s = fixtures::two_points("1", "0", "1/2");
        CHECK_THROWS_AS(CausalChain({0, 1}, s), std::invalid_argument);
    }
    SUBCASE("monotone chains over random spaces always realize") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto s = fixtures::random_space(seed * 8 + 7, 7);
            CausalRelation rel = causal_matrix(s);
            // longest greedy future-directed chain from each start
            for (int start = 0; start < s.size(); ++start) {
                std::vector<int> indices{start};
                int cur = start;
                for (;;) {
                    int next = -1;
                    for (int v = 0; v < s.size(); ++v)
                        if (v != cur && rel.rel(cur, v) && (next < 0 || s.tau(v) < s.tau(next)))
                            next = v;
                    if (next < 0) break;
                    indices.push_back(next);
                    cur = next;
                }
                if (indices.size() < 2) continue;
                CHECK(check_chain_realizer(CausalChain(indices, s), s).ok());
            }
        }
    }
}

}  // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gelmod/errors.hpp"
#include "gelmod/partitions.hpp"

#include <set>

using namespace gelmod;

TEST_CASE("partition basics") {
    const Partition p({3, 1});
    CHECK(p.sum() == 4);
    CHECK(p.count() == 2);
    CHECK(p.part(1) == 3);
    CHECK(p.part(2) == 1);
    CHECK(p.part(3) == 0);
    CHECK(p.to_string() == "[3,1]");
    CHECK(Partition::parse("[3,1]") == p);
    CHECK(Partition::parse("[]") == Partition{});
    CHECK(p.conjugate() == Partition({2, 1, 1}));
    CHECK(p.conjugate().conjugate() == p);

    // trailing zeros are stripped on construction
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
}

TEST_CASE("partition enumeration") {
    // p(n) for n = 0..8: 1 1 2 3 5 7 11 15 22
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        CHECK(ps.size() == static_cast<size_t>(counts[n]));
        for (const Partition& p : ps) CHECK(p.sum() == n);
        for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
    }
    CHECK(partitions_of(4).front() == Partition({4}));
    CHECK(partitions_of(4).back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("bipartition enumeration") {
    for (int n = 0; n <= 6; ++n) {
        const auto bps = bipartitions_of(n);
        std::set<std::string> seen;
        for (const BiPartition& bp : bps) {
            CHECK(bp.total() == n);
            seen.insert(bp.to_string());
        }
        CHECK(seen.size() == bps.size()); // all distinct
    }
    // sum over k of p(k) p(n-k) at n = 2: ([2],[]) ([1,1],[]) ([1],[1]) ([],[2]) ([],[1,1])
    CHECK(bipartitions_of(2).size() == 5);
}

TEST_CASE("lambda values") {
    // alpha = [2,1], padTo 3: lambda = (2-1+3, 1-2+3, 0-3+3) = (4,2,0)
    CHECK(lambda_values(Partition({2, 1}), 3) == std::vector<int>{4, 2, 0});
    CHECK(lambda_values(Partition{}, 2) == std::vector<int>{1, 0});
    CHECK_THROWS_AS(lambda_values(Partition({1, 1, 1}), 2), PadTooSmall);
    // always strictly decreasing
    for (const Partition& p : partitions_of(5)) {
        const auto lam = lambda_values(p, 6);
        for (size_t i = 1; i < lam.size(); ++i) CHECK(lam[i - 1] > lam[i]);
    }
}

TEST_CASE("rim hooks") {
    SUBCASE("single cell") {
        const auto hooks = remove_rim_hooks(Partition({1}), 1);
        REQUIRE(hooks.size() == 1);
        CHECK(hooks[0].first == Partition{});
        CHECK(hooks[0].second == 0);
    }
    SUBCASE("length two, row vs column orientation") {
        // a horizontal strip has leg 0, a vertical one leg 1
        auto hooks = remove_rim_hooks(Partition({2}), 2);
        REQUIRE(hooks.size() == 1);
        CHECK(hooks[0] == std::pair(Partition{}, 0));
        hooks = remove_rim_hooks(Partition({1, 1}), 2);
        REQUIRE(hooks.size() == 1);
        CHECK(hooks[0] == std::pair(Partition{}, 1));
        // no valid 2-strip exists on the staircase: removing either corner
        // pair would leave a non-diagram
        CHECK(remove_rim_hooks(Partition({2, 1}), 2).empty());
    }
    SUBCASE("square block") {
        // the L-shaped rim of [2,2] is a valid 3-strip leaving [1]
        const auto hooks = remove_rim_hooks(Partition({2, 2}), 3);
        REQUIRE(hooks.size() == 1);
        CHECK(hooks[0] == std::pair(Partition({1}), 1));
        // but the full 2x2 block is not a border strip
        CHECK(remove_rim_hooks(Partition({2, 2}), 4).empty());
    }
}

TEST_CASE("standard tableaux counts") {
    CHECK(standard_tableaux_count(Partition{}) == 1);
    CHECK(standard_tableaux_count(Partition({3})) == 1);
    CHECK(standard_tableaux_count(Partition({2, 1})) == 2);
    CHECK(standard_tableaux_count(Partition({2, 2})) == 2);
    CHECK(standard_tableaux_count(Partition({3, 2})) == 5);
    CHECK(standard_tableaux_count(Partition({2, 2, 1})) == 5);
    // dimensions of S_5 irreducibles square-sum to 120
    Int sq = 0;
    for (const Partition& p : partitions_of(5)) {
        const Int d = standard_tableaux_count(p);
        sq += d * d;
    }
    CHECK(sq == 120);
}

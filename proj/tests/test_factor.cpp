#include <random>

#include "doctest.h"
#include "factorbench/factor.hpp"
#include "factorbench/graph_io.hpp"
#include "test_util.hpp"

using namespace factorbench;

namespace {

Graph two_k2() { return disjoint_union(complete_graph(2), complete_graph(2)); }

}  // namespace

TEST_CASE("low set") {
    CHECK(low_set(cycle_graph(4), to_mask({0}), 2) == to_mask({1, 3}));
    CHECK(low_set(complete_graph(5), 0, 2) == 0);
    CHECK(low_set(two_k2(), to_mask({0}), 1) == to_mask({1}));
}

TEST_CASE("deficiency") {
    CHECK(deficiency(cycle_graph(4), 0, 2, 3) == 0);
    CHECK(deficiency(cycle_graph(4), to_mask({0}), 2, 3) == 1);
    SUBCASE("extremal graph after deleting V0, S = small clique") {
        const ExtremalWitness w = build_extremal(2, 2, 3, 1);
        const Deleted d = remove(w.graph, DeletionSpec::of_vertices(to_vector(w.deletion_set())));
        // The small clique keeps labels 0..1 after the order-preserving remap.
        const VertexMask s = w.clique_small;
        CHECK(deficiency(d.graph, s, 2, 3) == -1);
        CHECK(low_set(d.graph, s, 2) == w.isolated_row);
    }
}

TEST_CASE("T and T' give the same deficiency") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 3000; ++i) {
        const int n = 2 + static_cast<int>(rng() % 10);
        const Graph g = generate_random(n, Fraction(static_cast<std::int64_t>(rng() % 9), 8), rng());
        const VertexMask s = rng() & g.vertices();
        const int a = 1 + static_cast<int>(rng() % 4);
        const int b = a + 1 + static_cast<int>(rng() % 3);
        REQUIRE(deficiency(g, s, a, b) == deficiency_upper(g, s, a, b));
    }
}

TEST_CASE("subset criterion") {
    CHECK(check_ab_factor(cycle_graph(4), 1, 2).exists);
    const auto p4 = check_ab_factor(path_graph(4), 2, 3);
    REQUIRE_FALSE(p4.exists);
    CHECK(p4.violation->s == 0);
    CHECK(p4.violation->t == to_mask({0, 3}));
    CHECK(p4.violation->delta == -2);
    CHECK_THROWS_AS((void)check_ab_factor(cycle_graph(4), 2, 2), UnsupportedError);
    CHECK_THROWS_AS((void)check_ab_factor(Graph(17), 1, 2), CapExceeded);

    SUBCASE("parallel scan returns the serial witness") {
        Caps par;
        par.exec = Execution::Parallel;
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const Graph g = generate_random(12, Fraction(1, 3), seed);
            const auto x = check_ab_factor(g, 2, 3);
            const auto y = check_ab_factor(g, 2, 3, par);
            CHECK(x.exists == y.exists);
            if (!x.exists) CHECK(*x.violation == *y.violation);
        }
    }
}

TEST_CASE("(g,f) criterion") {
    const std::vector<int> ones(6, 1);
    CHECK(check_gf_factor(cycle_graph(6), ones, ones).exists);
    CHECK(brute_force_gf_factor(cycle_graph(6), ones, ones).has_value());
    const std::vector<int> three(3, 1);
    CHECK_THROWS_AS((void)check_gf_factor(complete_graph(3), three, three), UnsupportedError);
    // Bipartite exact-degree cases agree with the edge-subset oracle.
    for_each_small_graph(6, [](const Graph& g) {
        if (!g.is_bipartite()) return;
        const std::vector<int> k(static_cast<std::size_t>(g.order()), 1);
        REQUIRE(check_gf_factor(g, k, k).exists == brute_force_gf_factor(g, k, k).has_value());
    });
    // Constant bounds reproduce the [a,b] criterion.
    for_each_small_graph(5, [](const Graph& g) {
        const std::vector<int> lo(static_cast<std::size_t>(g.order()), 2);
        const std::vector<int> hi(static_cast<std::size_t>(g.order()), 3);
        REQUIRE(check_gf_factor(g, lo, hi).exists == check_ab_factor(g, 2, 3).exists);
    });
}

TEST_CASE("constructive finder") {
    SUBCASE("K4 (1,1) gives a perfect matching") {
        const auto c = find_ab_factor(complete_graph(4), 1, 1);
        REQUIRE(c.exists);
        CHECK(c.factor->size() == 2);
        CHECK(is_factor(complete_graph(4), *c.factor, 1, 1));
    }
    SUBCASE("C5 has no perfect matching") { CHECK_FALSE(find_ab_factor(cycle_graph(5), 1, 1).exists); }
    SUBCASE("C4 (2,2) is C4 itself") {
        const auto c = find_ab_factor(cycle_graph(4), 2, 2);
        REQUIRE(c.exists);
        CHECK(*c.factor == cycle_graph(4).edges());
    }
    SUBCASE("a = 0 returns the empty subgraph") {
        const auto c = find_ab_factor(empty_graph(3), 0, 2);
        CHECK(c.exists);
        CHECK(c.factor->empty());
    }
    SUBCASE("empty graph with a >= 1") { CHECK_FALSE(find_ab_factor(empty_graph(3), 1, 2).exists); }
    SUBCASE("nonexistence carries the criterion violation") {
        const auto c = find_ab_factor(path_graph(4), 2, 3);
        REQUIRE_FALSE(c.exists);
        REQUIRE(c.violation.has_value());
        CHECK(c.violation->delta == -2);
    }
    SUBCASE("budget") {
        Caps tiny;
        tiny.gadget_vertices = 10;
        CHECK_THROWS_AS((void)find_ab_factor(complete_graph(6), 2, 3, tiny), BudgetExceeded);
    }
    SUBCASE("large instance beyond the subset cap") {
        const ExtremalWitness w = build_extremal(3, 3, 4, 1);
        CHECK(w.graph.order() == 58);
        const Deleted d = remove(w.graph, DeletionSpec::of_vertices(to_vector(w.deletion_set())));
        const auto c = find_ab_factor(d.graph, 3, 4);
        CHECK_FALSE(c.exists);
        CHECK_FALSE(c.violation.has_value());
        const auto whole = find_ab_factor(complete_graph(40), 3, 4);
        REQUIRE(whole.exists);
        CHECK(is_factor(complete_graph(40), *whole.factor, 3, 4));
    }
}

TEST_CASE("brute-force oracle") {
    CHECK_FALSE(brute_force_factor(empty_graph(3), 1, 2));
    CHECK(brute_force_factor(complete_graph(2), 1, 1));
    CHECK_THROWS_AS((void)brute_force_factor(complete_graph(8), 1, 2), CapExceeded);
}

TEST_CASE("criterion, finder and oracle agree on every graph up to 6 vertices") {
    const std::pair<int, int> params[] = {{1, 2}, {1, 3}, {2, 3}};
    for_each_small_graph(6, [&](const Graph& g) {
        for (auto [a, b] : params) {
            const auto crit = check_ab_factor(g, a, b);
            const auto found = find_ab_factor(g, a, b);
            const bool oracle = brute_force_factor(g, a, b);
            REQUIRE(crit.exists == oracle);
            REQUIRE(found.exists == oracle);
            if (found.exists) REQUIRE(is_factor(g, *found.factor, a, b));
            if (!crit.exists) REQUIRE(deficiency(g, crit.violation->s, a, b) == crit.violation->delta);
        }
        // Exact-degree factors only have the finder and the oracle.
        for (int k = 1; k <= 2; ++k) REQUIRE(find_ab_factor(g, k, k).exists == brute_force_factor(g, k, k));
    });
}

TEST_CASE("star factors") {
    CHECK(check_star_factor(star_graph(3), 3).exists);
    const auto fail = check_star_factor(star_graph(3), 2);
    REQUIRE_FALSE(fail.exists);
    CHECK(fail.violation->s == to_mask({0}));
    CHECK(fail.violation->delta == 2 - 3);
    const auto iso = check_star_factor(disjoint_union(complete_graph(1), complete_graph(3)), 2);
    REQUIRE_FALSE(iso.exists);
    CHECK(iso.violation->s == 0);
    // The isolated-vertex condition alone would accept K3 for m = 1.
    CHECK_FALSE(check_star_factor(complete_graph(3), 1).exists);

    SUBCASE("P4, m = 2") {
        const auto f = find_star_factor(path_graph(4), 2);
        REQUIRE(f.has_value());
        CHECK(validate_star_forest(path_graph(4), *f, 2).empty());
        CHECK(f->size() == 2);
    }
    SUBCASE("K_{1,3}, m = 3 is one star at the hub") {
        const auto f = find_star_factor(star_graph(3), 3);
        REQUIRE(f.has_value());
        REQUIRE(f->size() == 1);
        CHECK(f->front().center == 0);
        CHECK(f->front().leaves == std::vector<int>{1, 2, 3});
    }
    SUBCASE("2K2, m = 1") {
        const auto f = find_star_factor(two_k2(), 1);
        REQUIRE(f.has_value());
        CHECK(f->size() == 2);
        CHECK(validate_star_forest(two_k2(), *f, 1).empty());
    }
    SUBCASE("validator rejects bad forests") {
        CHECK_FALSE(validate_star_forest(path_graph(4), {{1, {0, 2}}}, 2).empty());           // 3 uncovered
        CHECK_FALSE(validate_star_forest(path_graph(4), {{0, {1, 2, 3}}}, 3).empty());        // non-edges
        CHECK_FALSE(validate_star_forest(path_graph(4), {{1, {0, 2}}, {2, {3}}}, 2).empty()); // overlap
        CHECK_FALSE(validate_star_forest(star_graph(3), {{0, {1, 2, 3}}}, 2).empty());        // too big
    }
}

TEST_CASE("star criterion, decomposition and [1,m] finder agree up to 6 vertices") {
    for_each_small_graph(6, [](const Graph& g) {
        for (int m = 1; m <= 3; ++m) {
            const bool crit = check_star_factor(g, m).exists;
            const auto forest = find_star_factor(g, m);
            REQUIRE(crit == forest.has_value());
            REQUIRE(crit == find_ab_factor(g, 1, m).exists);
            if (forest) REQUIRE(validate_star_forest(g, *forest, m).empty());
            if (m >= 2 && g.min_degree() >= 1)
                REQUIRE(crit == (isolated_toughness(g).value >= Fraction(1, m)));
        }
    });
}

TEST_CASE("maximal independent set / cover pairs") {
    SUBCASE("P3 with ends in S1 and middle in S2, a = 3") {
        const std::vector<int> classes{1, 2, 1};
        const auto pair = find_katerinis_pair(path_graph(3), classes, 3);
        CHECK(pair.independent == to_mask({0, 2}));
        CHECK(pair.cover == to_mask({1}));
        CHECK(pair.lhs == 1);
        CHECK(pair.rhs == 4);
    }
    SUBCASE("edgeless graph, a = 2") {
        const std::vector<int> classes(4, 1);
        const auto pair = find_katerinis_pair(empty_graph(4), classes, 2);
        CHECK(pair.independent == to_mask({0, 1, 2, 3}));
        CHECK(pair.cover == 0);
        CHECK(pair.lhs == 0);
        CHECK(pair.rhs == 4);
    }
    SUBCASE("K2 inside S2, a = 3") {
        const std::vector<int> classes{2, 2};
        const auto pair = find_katerinis_pair(complete_graph(2), classes, 3);
        CHECK(popcount(pair.independent) == 1);
        CHECK(popcount(pair.cover) == 1);
        CHECK(pair.lhs == 1);
        CHECK(pair.rhs == 2);
    }
    SUBCASE("invalid partitions name the vertex") {
        const std::vector<int> too_low{1, 1, 1};
        CHECK_THROWS_WITH_AS((void)find_katerinis_pair(path_graph(3), too_low, 3), doctest::Contains("vertex 1"),
                             PartitionError);
        const std::vector<int> out_of_range{1, 3, 1};
        CHECK_THROWS_AS((void)find_katerinis_pair(path_graph(3), out_of_range, 3), PartitionError);
    }
    SUBCASE("enumeration matches a brute-force maximality filter") {
        for_each_small_graph(5, [](const Graph& g) {
            std::vector<VertexMask> expected;
            for (VertexMask s = 0; s <= g.vertices(); ++s) {
                bool independent = true;
                bool maximal = true;
                for (int v = 0; v < g.order(); ++v) {
                    if ((s >> v) & 1U) independent = independent && (g.neighbors(v) & s) == 0;
                    else maximal = maximal && (g.neighbors(v) & s) != 0;
                }
                if (independent && maximal) expected.push_back(s);
            }
            auto got = maximal_independent_sets(g);
            std::sort(got.begin(), got.end());
            REQUIRE(got == expected);
        });
    }
}

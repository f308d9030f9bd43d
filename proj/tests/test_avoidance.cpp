#include "doctest.h"
#include "factorbench/avoidance.hpp"
#include "factorbench/graph_io.hpp"
#include "factorbench/toughness.hpp"
#include "test_util.hpp"

using namespace factorbench;

TEST_CASE("vertex deletion") {
    const auto k6 = check_vertex_deletion_all(complete_graph(6), 2, 3, 1);
    CHECK(k6.premises_hold());
    CHECK(k6.conclusion == true);
    CHECK(k6.routes_agree());
    CHECK(k6.outcome() == Outcome::Verified);
    CHECK(k6.deletions_checked == 6);

    const auto c5 = check_vertex_deletion_all(cycle_graph(5), 1, 2, 1);
    CHECK(c5.conclusion == true);
    CHECK(c5.routes_agree());

    const auto c6 = check_vertex_deletion_all(cycle_graph(6), 2, 3, 1);
    CHECK(c6.conclusion == false);
    CHECK(c6.routes_agree());
    CHECK(c6.outcome() == Outcome::Vacuous);
    REQUIRE(c6.counterexample);
    CHECK(c6.counterexample->deletion.vertices == std::vector<int>{0});
    REQUIRE(c6.counterexample->criterion);
    CHECK((c6.counterexample->criterion->s & 1U) == 1U);

    AvoidOptions skip;
    skip.skip_conclusion_if_vacuous = true;
    CHECK_FALSE(check_vertex_deletion_all(cycle_graph(6), 2, 3, 1, skip).conclusion.has_value());

    AvoidOptions tight;
    tight.max_deletions = 5;
    CHECK_THROWS_AS((void)check_vertex_deletion_all(complete_graph(6), 2, 3, 1, tight), CapExceeded);
}

TEST_CASE("sharpness family, m = 1, (2,3,1)") {
    const SharpnessReport r = check_sharpness(1, 2, 3, 1);
    CHECK(r.ratio < r.threshold);
    CHECK(r.demand == 4);
    CHECK(r.supply == 3);
    CHECK(r.verdict.conclusion == false);
    CHECK_FALSE(r.verdict.premises_hold());
    REQUIRE(r.verdict.counterexample);
    REQUIRE(r.verdict.counterexample->criterion);
    CHECK(r.verdict.counterexample->criterion->s == (r.extremal.clique_small | r.deleted));
    REQUIRE(r.verdict.counterexample->certificate.violation);
    CHECK(r.verdict.counterexample->certificate.violation->s == r.extremal.clique_small);
    CHECK(r.verdict.counterexample->certificate.violation->delta == -1);
}

TEST_CASE("edge deletion, star factors") {
    const auto c4 = check_edge_deletion_star(cycle_graph(4), 2, 1);
    CHECK(c4.premises_hold());
    CHECK(c4.conclusion == true);
    CHECK(c4.routes_agree());
    CHECK(c4.deletions_checked == 4);

    const auto claw = check_edge_deletion_star(star_graph(3), 2, 1);
    CHECK_FALSE(claw.premises_hold());
    CHECK(claw.outcome() == Outcome::Vacuous);

    const auto k4 = check_edge_deletion_star(complete_graph(4), 2, 1);
    CHECK(k4.outcome() == Outcome::Verified);
    CHECK(k4.deletions_checked == 6);

    // Odd m: n = ceil(m/2) is outside the integer reading of the range.
    const auto odd = check_edge_deletion_star(complete_graph(5), 3, 2);
    CHECK_FALSE(odd.premises.front().holds);
}

TEST_CASE("matching deletion") {
    CHECK(enumerate_matchings(cycle_graph(4), 2, 100).size() == 2);
    CHECK(enumerate_matchings(complete_graph(4), 2, 100).size() == 3);
    CHECK(enumerate_matchings(complete_graph(6), 1, 100).size() == 15);
    CHECK_THROWS_AS((void)enumerate_matchings(complete_graph(6), 1, 10), CapExceeded);

    const auto k6 = check_matching_deletion(complete_graph(6), 2, 3, 1);
    CHECK(k6.premises_hold());
    CHECK(k6.outcome() == Outcome::Verified);
    CHECK(k6.deletions_checked == 15);
    CHECK(isolated_toughness(complete_graph(6)).value >= Fraction(1) + Fraction(4, 3));
}

TEST_CASE("rho") {
    const RhoValue c4 = rho(cycle_graph(4), {0, 1}, 0, 2);
    CHECK(c4.value == 2);
    CHECK(c4.branch == RhoValue::Case::BothInT);
    CHECK(rho(complete_graph(4), {0, 1}, 0, 2).value == 0);

    Graph pendant = disjoint_union(complete_graph(4), Graph(1));
    pendant.add_edge(0, 4);
    const RhoValue p = rho(pendant, {0, 4}, 0, 2);
    CHECK(p.value == 1);
    CHECK(p.u_location == Location::WPrime);
    CHECK(p.v_location == Location::TPrime);

    CHECK(rho(cycle_graph(4), {0, 1}, to_mask({0}), 2).value == 0);
    CHECK_THROWS_AS((void)rho(cycle_graph(4), {0, 2}, 0, 2), GraphError);

    for_each_small_graph(5, [](const Graph& g) {
        for (const Edge& e : g.edges())
            for (VertexMask s = 0; s <= g.vertices(); ++s) {
                const RhoValue r = rho(g, e, s, 2);
                const bool touches_t = r.u_location == Location::TPrime || r.v_location == Location::TPrime;
                REQUIRE(r.value >= 0);
                REQUIRE(r.value <= 2);
                if (!touches_t) REQUIRE(r.value == 0);
            }
    });
}

TEST_CASE("edge avoiding") {
    CHECK(check_edge_avoiding(complete_graph(4), {0, 1}, 2, 3).conclusion == true);
    const auto c4 = check_edge_avoiding(cycle_graph(4), {0, 1}, 2, 3);
    CHECK(c4.conclusion == false);
    CHECK(c4.routes_agree());
    REQUIRE(c4.counterexample);
    REQUIRE(c4.counterexample->criterion);
    CHECK(c4.counterexample->criterion->s == 0);
    CHECK(c4.counterexample->criterion->delta == 0);
    CHECK(c4.witnesses.front().value == "2");
    CHECK(check_edge_avoiding(cycle_graph(4), {0, 1}, 1, 2).conclusion == true);
    CHECK_THROWS_AS((void)check_edge_avoiding(cycle_graph(4), {0, 1}, 2, 2), UnsupportedError);
}

TEST_CASE("edge avoiding routes agree on small graphs") {
    for_each_small_graph(5, [](const Graph& g) {
        if (g.min_degree() < 1) return;
        for (const Edge& e : g.edges()) REQUIRE(check_edge_avoiding(g, e, 2, 3).routes_agree());
    });
}

TEST_CASE("single-edge avoidance from pair deletions") {
    const auto k7 = check_theorem_E(complete_graph(7), 2, 3);
    CHECK(k7.premises_hold());
    CHECK(k7.outcome() == Outcome::Verified);
    CHECK(k7.deletions_checked == 21);
    CHECK(k7.routes_agree());

    const auto c5 = check_theorem_E(cycle_graph(5), 2, 3);
    CHECK_FALSE(c5.premises.front().holds);
    CHECK(c5.outcome() == Outcome::Vacuous);

    // With δ(G) >= a+2 a single vertex leaves no low vertex behind.
    const Graph g = complete_graph(7);
    for (int x = 0; x < 7; ++x) CHECK(deficiency(g, bit(x), 2, 3) == 3);
}

TEST_CASE("descending deletions") {
    const auto k7 = check_theorem_D(complete_graph(7), 2, 3, 2);
    CHECK(k7.premises_hold());
    CHECK(k7.outcome() == Outcome::Verified);
    CHECK(k7.deletions_checked == 21 + 7);

    const auto c6 = check_theorem_D(cycle_graph(6), 2, 3, 1);
    CHECK_FALSE(c6.premises_hold());
    CHECK(c6.outcome() == Outcome::Vacuous);

    // n = 1: the consequent is G itself.
    const auto k5 = check_theorem_D(complete_graph(5), 2, 3, 1);
    CHECK(k5.conclusion == true);
}

TEST_CASE("low-set deficiency bound") {
    const auto k8 = check_lemma_D1(complete_graph(8), 2, 3, 1, 2);
    CHECK(k8.premises_hold());
    CHECK(k8.outcome() == Outcome::Verified);
    CHECK_THROWS_AS((void)check_lemma_D1(complete_graph(8), 2, 3, 1, 4), ThresholdError);
    CHECK_THROWS_AS((void)check_lemma_D1(complete_graph(8), 2, 3, 1, 1), ThresholdError);

    AvoidOptions skip;
    skip.skip_conclusion_if_vacuous = true;
    const auto c5 = check_lemma_D1(cycle_graph(5), 2, 3, 1, 2, skip);
    CHECK(c5.outcome() == Outcome::Vacuous);
    CHECK_FALSE(c5.conclusion.has_value());
}

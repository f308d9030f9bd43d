#include "doctest.h"
#include "factorbench/campaign.hpp"
#include "factorbench/graph_io.hpp"
#include "factorbench/report.hpp"

using namespace factorbench;

TEST_CASE("certificate JSON") {
    const FactorCertificate p4 = check_ab_factor(path_graph(4), 2, 3);
    const Json j = certificate_json(p4);
    CHECK(j["verdict"] == "not-exists");
    CHECK(j["S"] == Json::array());
    CHECK(j["T"] == Json({0, 3}));
    CHECK(j["delta"] == -2);
    CHECK(reverify_certificate(path_graph(4), 2, 3, j).empty());

    Json tampered = j;
    tampered["delta"] = -1;
    CHECK_FALSE(reverify_certificate(path_graph(4), 2, 3, tampered).empty());

    const FactorCertificate c4 = find_ab_factor(cycle_graph(4), 2, 2);
    const Json f = certificate_json(c4);
    CHECK(f["factorEdges"].size() == 4);
    CHECK(reverify_certificate(cycle_graph(4), 2, 2, f).empty());
    CHECK_FALSE(reverify_certificate(path_graph(4), 2, 2, f).empty());

    const auto forest = find_star_factor(path_graph(4), 2);
    const Json s = star_certificate_json(check_star_factor(path_graph(4), 2), forest);
    CHECK(s["stars"].size() == 2);
}

TEST_CASE("deletion JSON round trip") {
    for (const DeletionSpec& spec : {DeletionSpec::of_vertices({1, 4}), DeletionSpec::of_edges({{0, 1}, {2, 3}}),
                                     DeletionSpec::of_matching({{0, 1}}), DeletionSpec::of_edge({2, 5})}) {
        const DeletionSpec back = parse_deletion(deletion_json(spec));
        CHECK(back.kind == spec.kind);
        CHECK(back.vertices == spec.vertices);
        CHECK(back.edges == spec.edges);
    }
}

TEST_CASE("verdicts re-verify from their serialized form") {
    const Graph c4 = cycle_graph(4);
    const Json edge = verdict_json(check_edge_avoiding(c4, {0, 1}, 2, 3), c4);
    CHECK(edge["conclusion"] == false);
    CHECK(edge["counterexample"]["criterion"]["S"] == Json::array());
    CHECK(reverify_verdict(edge).empty());

    const Graph k6 = complete_graph(6);
    const Json matching = verdict_json(check_matching_deletion(k6, 2, 3, 1), k6);
    CHECK(matching["outcome"] == "verified");
    CHECK(reverify_verdict(matching).empty());

    const Graph c6 = cycle_graph(6);
    const Json vertex = verdict_json(check_vertex_deletion_all(c6, 2, 3, 1), c6);
    CHECK(vertex["outcome"] == "vacuous");
    CHECK(reverify_verdict(vertex).empty());

    const SharpnessReport r = check_sharpness(1, 2, 3, 1);
    const Json sharp = verdict_json(r.verdict, r.extremal.graph);
    CHECK(reverify_verdict(sharp).empty());
    Json wrong = sharp;
    wrong["counterexample"]["deletion"]["vertices"] = Json({0});
    CHECK_FALSE(reverify_verdict(wrong).empty());

    const Json claw = verdict_json(check_edge_deletion_star(star_graph(3), 2, 1), star_graph(3));
    CHECK(claw["outcome"] == "vacuous");
    CHECK(reverify_verdict(claw).empty());
}

TEST_CASE("campaign config") {
    const CampaignConfig c = parse_config(
        "# comment\n"
        "theorems=A,D1\n"
        "vertices=5..7\n"
        "p=1/2, 9/10\n"
        "ab=2:3\n"
        "n=1\n"
        "k=2,b\n"
        "quota=3\n"
        "max_attempts=100\n"
        "extremal=1:2:3:1\n");
    CHECK(c.theorems == std::vector<TheoremTag>{TheoremTag::A, TheoremTag::LemmaD1});
    CHECK(c.min_vertices == 5);
    CHECK(c.densities.back() == Fraction(9, 10));
    CHECK(parse_config(to_text(c)) == c);
    CHECK(parse_config(to_text(CampaignConfig{})) == CampaignConfig{});

    auto field_of = [](const char* text) {
        try {
            (void)parse_config(text);
        } catch (const ConfigError& e) {
            return e.field();
        }
        return std::string("none");
    };
    CHECK(field_of("ab=3:2\n") == "ab");
    CHECK(field_of("quota=x\n") == "quota");
    CHECK(field_of("colour=blue\n") == "colour");
    CHECK(field_of("theorems=A,Z\n") == "theorems");
    CHECK(field_of("vertices=4..14\n") == "vertices");
    CHECK(field_of("p=3/2\n") == "p");
    CHECK(field_of("seed=1\nseed=2\n") == "seed");
    CHECK(field_of("just text\n") == "line 1");
}

TEST_CASE("campaign runs are deterministic") {
    CampaignConfig c;
    c.theorems = {TheoremTag::A, TheoremTag::B, TheoremTag::C};
    c.min_vertices = 6;
    c.max_vertices = 8;
    c.quota = 4;
    c.m_values = {2, 3};
    c.extremal = {{1, 2, 3, 1}};
    CampaignReport first = run_campaign(c);
    CampaignReport second = run_campaign(c, Execution::Parallel);
    first.json.erase("header");
    second.json.erase("header");
    CHECK(first.json.dump() == second.json.dump());
    CHECK(first.counts.counterexample == 0);
    CHECK(first.counts.expected_failure == 1);
    CHECK_FALSE(first.failed());
    CHECK(first.json["extremal"][0]["status"] == "expected-failure");
    CHECK(first.counts.total() == first.counts.verified + first.counts.vacuous + first.counts.capped + 1);
    const std::string csv = csv_summary(first);
    CHECK(csv.rfind("theorem,params,attempts,verified,vacuous,counterexample,capped\n", 0) == 0);
    // B with m=2 admits only n=1; the n=2 cell is skipped, not sampled.
    bool skipped = false;
    for (const CellSummary& s : first.cells)
        if (s.theorem == TheoremTag::B && !s.note.empty()) skipped = s.attempts == 0;
    CHECK(skipped);
}

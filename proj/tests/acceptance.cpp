// Acceptance suite: one PASS/FAIL line per criterion. Arguments select
// criteria by number; no arguments runs all nine.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "factorbench/avoidance.hpp"
#include "factorbench/campaign.hpp"
#include "factorbench/factor.hpp"
#include "factorbench/graph_io.hpp"
#include "factorbench/report.hpp"
#include "factorbench/toughness.hpp"
#include "test_util.hpp"

using namespace factorbench;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

/// The random corpus shared by criteria 2 and 5: 1000 graphs, 7 <= n <= 12.
std::vector<Graph> random_corpus() {
    std::mt19937_64 rng(20240611);
    std::vector<Graph> out;
    for (int i = 0; i < 1000; ++i) {
        const int n = 7 + static_cast<int>(rng() % 6);
        const Fraction p(1 + static_cast<std::int64_t>(rng() % 9), 10);
        out.push_back(generate_random(n, p, rng()));
    }
    return out;
}

std::string describe(const Graph& g) { return emit_graph6(g); }

Result oracle_triangle() {
    const std::pair<int, int> params[] = {{1, 2}, {1, 3}, {2, 3}};
    std::uint64_t graphs = 0;
    std::uint64_t disagreements = 0;
    std::string first;
    for_each_small_graph(7, [&](const Graph& g) {
        ++graphs;
        for (auto [a, b] : params) {
            const FactorCertificate crit = check_ab_factor(g, a, b);
            const FactorCertificate found = find_ab_factor(g, a, b);
            const bool oracle = brute_force_factor(g, a, b);
            bool ok = crit.exists == found.exists && found.exists == oracle;
            if (found.factor) ok = ok && is_factor(g, *found.factor, a, b);
            if (!crit.exists) ok = ok && crit.violation && deficiency(g, crit.violation->s, a, b) < 0;
            if (!ok && disagreements++ == 0) first = describe(g) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
    });
    std::ostringstream d;
    d << graphs << " labeled graphs on <= 7 vertices x 3 (a,b): " << disagreements << " disagreements";
    if (!first.empty()) d << ", first " << first;
    return {disagreements == 0, d.str()};
}

Result toughness_equivalence() {
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    std::string first;
    auto check = [&](const Graph& g) {
        ++checked;
        const ToughnessReport fast = isolated_toughness(g);
        const ToughnessReport slow = isolated_toughness_bruteforce(g);
        if (fast.value != slow.value || !witness_valid(g, fast) || !witness_valid(g, slow))
            if (bad++ == 0) first = describe(g);
    };
    for_each_small_graph(6, check);
    for (const Graph& g : random_corpus()) check(g);
    std::ostringstream d;
    d << checked << " graphs (all <= 6 vertices, 1000 random 7..12): " << bad << " mismatches";
    if (!first.empty()) d << ", first " << first;
    return {bad == 0, d.str()};
}

Result sharpness() {
    const int abn[][3] = {{2, 3, 1}, {2, 4, 2}, {3, 4, 1}};
    int cases = 0;
    std::string failures;
    for (const auto& p : abn)
        for (int m = 1; m <= 3; ++m) {
            const int a = p[0], b = p[1], n = p[2];
            ++cases;
            const SharpnessReport r = check_sharpness(m, a, b, n);
            const Fraction formula(static_cast<std::int64_t>(m * b + 1) * (a - 1 + n) + m * (a - 1), m * b + 1);
            const auto& cx = r.verdict.counterexample;
            std::string why;
            if (r.ratio != formula) why += " ratio";
            if (!(r.ratio < r.threshold)) why += " ratio>=threshold";
            if (r.threshold != Fraction(a - 1 + n) + Fraction(a - 1, b)) why += " threshold";
            if (r.verdict.conclusion != false) why += " conclusion";
            if (!cx || to_mask(cx->deletion.vertices) != r.deleted) why += " V0";
            if (cx && (!cx->certificate.violation || cx->certificate.violation->s != r.extremal.clique_small ||
                       cx->certificate.violation->delta >= 0))
                why += " witness-S";
            if (cx && (!cx->criterion || cx->criterion->s != (r.extremal.clique_small | r.deleted))) why += " criterion-S";
            if (r.demand != static_cast<std::int64_t>(m * b + 1) * (a - 1)) why += " demand";
            if (r.supply != static_cast<std::int64_t>(m) * b * (a - 1)) why += " supply";
            if (!(r.demand > r.supply)) why += " demand<=supply";
            if (isolated_toughness(r.extremal.graph).value > r.ratio) why += " I(H)>ratio";
            if (!why.empty())
                failures += " (m=" + std::to_string(m) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                            ",n=" + std::to_string(n) + ":" + why + ")";
        }
    return {failures.empty(), std::to_string(cases) + " extremal instances" + (failures.empty() ? ", all reproduce" : failures)};
}

Result campaigns() {
    CampaignConfig config = parse_config(
        "theorems=A,B,C,E,D1\n"
        "vertices=6..10\n"
        "p=7/10,4/5,9/10,19/20\n"
        "seed=2024\n"
        "ab=1:2,2:3\n"
        "n=1,2\n"
        "m=2,3,4\n"
        "k=2,b\n"
        "quota=60\n"
        "max_attempts=5000\n"
        "cap_subset=12\n"
        "cap_deletions=5000\n");
    const CampaignReport report = run_campaign(config);
    int unverifiable = 0;
    for (const Json& row : report.json.at("instances"))
        if (row.contains("verdict") && !reverify_verdict(row.at("verdict"), {.caps{.subset_vertices = 12}, .max_deletions = 5000}).empty())
            ++unverifiable;
    int short_cells = 0;
    for (const CellSummary& c : report.cells)
        if (c.note.empty() && c.verified + c.counterexample < config.quota) ++short_cells;
    const auto& k = report.counts;
    std::ostringstream d;
    d << k.verified << " premise-satisfying instances verified, " << k.counterexample << " counterexamples, " << k.vacuous
      << " vacuous samples excluded, " << k.capped << " capped, " << short_cells << " cells below quota, " << unverifiable
      << " reports failing re-verification";
    return {k.verified >= 1000 && k.counterexample == 0 && unverifiable == 0, d.str()};
}

Result isolated_count_bounds() {
    std::uint64_t edges = 0;
    std::uint64_t violations = 0;
    auto check = [&](const Graph& g) {
        const int base = isolated_count(g, 0);
        for (const Edge& e : g.edges()) {
            ++edges;
            const int after = isolated_count(remove_edges(g, std::vector<Edge>{e}), 0);
            if (after < base || after > base + 2) ++violations;
        }
    };
    for_each_small_graph(7, check);
    for (const Graph& g : random_corpus()) check(g);
    const Graph k2 = complete_graph(2);
    const bool boundary = isolated_count(remove_edges(k2, std::vector<Edge>{{0, 1}}), 0) == isolated_count(k2, 0) + 2;
    std::ostringstream d;
    d << edges << " edge deletions: " << violations << " violations; K2 boundary i(K2-e) = i(K2)+2 " << (boundary ? "holds" : "fails");
    return {violations == 0 && boundary, d.str()};
}

Result edge_avoiding_equivalence() {
    std::uint64_t cases = 0;
    std::uint64_t disagreements = 0;
    for_each_small_graph(6, [&](const Graph& g) {
        if (g.min_degree() < 1) return;
        for (const Edge& e : g.edges())
            for (auto [a, b] : {std::pair{2, 3}, std::pair{1, 2}}) {
                ++cases;
                const AvoidanceVerdict v = check_edge_avoiding(g, e, a, b);
                if (!v.routes_agree()) ++disagreements;
            }
    });
    return {disagreements == 0, std::to_string(cases) + " (graph, edge, a, b) cases with min degree >= 1: " +
                                    std::to_string(disagreements) + " disagreements"};
}

Result cover_pairs() {
    std::uint64_t partitions = 0;
    std::uint64_t failures = 0;
    for_each_small_graph(6, [&](const Graph& g) {
        for (int a : {3, 4}) {
            if (g.max_degree() > a - 1) continue;  // degree ceiling is not a valid class assignment
            ++partitions;
            const std::vector<int> classes = degree_ceiling_classes(g);
            try {
                const KaterinisPair p = find_katerinis_pair(g, classes, a);
                bool ok = (p.independent & p.cover) == 0 && (p.independent | p.cover) == g.vertices();
                ok = ok && (g.neighborhood(p.independent) & p.independent) == 0;
                for (int x : to_vector(p.cover)) ok = ok && (g.neighbors(x) & p.independent) != 0;
                std::int64_t lhs = 0, rhs = 0;
                for (int x = 0; x < g.order(); ++x) {
                    const int j = classes[static_cast<std::size_t>(x)];
                    if ((p.cover >> x) & 1U) lhs += a - j;
                    else rhs += static_cast<std::int64_t>(j) * (a - j);
                }
                ok = ok && lhs == p.lhs && rhs == p.rhs && lhs <= rhs;
                if (!ok) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    });
    return {failures == 0 && partitions > 0,
            std::to_string(partitions) + " degree-ceiling partitions (a = 3, 4): " + std::to_string(failures) + " failures"};
}

Result star_equivalence() {
    std::uint64_t cases = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t invalid = 0;
    for_each_small_graph(7, [&](const Graph& g) {
        for (int m = 1; m <= 3; ++m) {
            ++cases;
            const bool crit = check_star_factor(g, m).exists;
            const auto forest = find_star_factor(g, m);
            const bool factor = find_ab_factor(g, 1, m).exists;
            if (crit != forest.has_value() || crit != factor) ++disagreements;
            if (forest && !validate_star_forest(g, *forest, m).empty()) ++invalid;
        }
    });
    return {disagreements == 0 && invalid == 0, std::to_string(cases) + " (graph, m) cases on <= 7 vertices: " +
                                                    std::to_string(disagreements) + " disagreements, " +
                                                    std::to_string(invalid) + " invalid forests"};
}

Result deficiency_identity() {
    std::mt19937_64 rng(99);
    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const Graph g = generate_random(n, Fraction(static_cast<std::int64_t>(rng() % 11), 10), rng());
        const VertexMask s = rng() & g.vertices();
        const int a = 1 + static_cast<int>(rng() % 5);
        const int b = a + 1 + static_cast<int>(rng() % 4);
        if (deficiency(g, s, a, b) != deficiency_upper(g, s, a, b)) ++mismatches;
    }
    return {mismatches == 0, "10000 random (G, S, a, b) samples: " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"oracle triangle", oracle_triangle},
        {"toughness equivalence", toughness_equivalence},
        {"sharpness reproduction", sharpness},
        {"theorem campaigns", campaigns},
        {"isolated count under edge deletion", isolated_count_bounds},
        {"edge-avoiding criterion equivalence", edge_avoiding_equivalence},
        {"independent set / cover pairs", cover_pairs},
        {"star-factor equivalence", star_equivalence},
        {"T / T' deficiency identity", deficiency_identity},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d %s: %s (%s; %.1fs)\n", id, criteria[i].first.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str(), secs);
        std::fflush(stdout);
        if (!r.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}

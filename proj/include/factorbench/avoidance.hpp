#pragma once

// Factor checks that avoid a deleted object (vertex set, edge set, matching
// or single edge). Every check evaluates the hypotheses of the matching
// existence theorem, verifies its conclusion exhaustively, and where a
// second decision route exists runs it as well and compares.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factorbench/factor.hpp"
#include "factorbench/graph.hpp"
#include "factorbench/graph_io.hpp"

namespace factorbench {

enum class TheoremTag { A, B, C, D, E, Lemma3, LemmaD1, LemmaH };
[[nodiscard]] std::string to_string(TheoremTag tag);

/// Verified: premises hold and so does the conclusion. Vacuous: a premise
/// fails (the conclusion may still have been evaluated, for information).
/// Counterexample: premises hold and the conclusion fails.
enum class Outcome { Verified, Vacuous, Counterexample };
[[nodiscard]] std::string to_string(Outcome outcome);

struct Premise {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct Route {
    std::string name;
    bool holds = false;
};

/// A failing deletion. `certificate` describes G - X (a violation lifted to
/// host labels when one was computed); `criterion` is the host-graph set
/// that fails the deletion criterion, when that route produced one.
struct Counterexample {
    DeletionSpec deletion;
    FactorCertificate certificate;
    std::optional<Violation> criterion;
};

struct Witness {
    std::string label;
    VertexMask set = 0;
    std::string value;
};

struct AvoidanceVerdict {
    TheoremTag theorem = TheoremTag::A;
    std::vector<std::pair<std::string, std::int64_t>> params;  // see Params
    std::vector<Premise> premises;
    std::optional<bool> conclusion;  // nullopt when skipped for a vacuous instance
    std::optional<Counterexample> counterexample;
    std::vector<Route> routes;
    std::vector<Witness> witnesses;
    std::size_t deletions_checked = 0;

    [[nodiscard]] bool premises_hold() const;
    [[nodiscard]] bool routes_agree() const;
    [[nodiscard]] Outcome outcome() const;
};

struct AvoidOptions {
    Caps caps{.subset_vertices = 12};
    std::size_t max_deletions = 500;
    /// Leave `conclusion` unset when a premise fails.
    bool skip_conclusion_if_vacuous = false;
    /// Explicit deletions for the vertex check instead of every n-subset.
    std::optional<std::vector<VertexMask>> deletions;
    /// Sets S (host labels, disjoint from the deletion) tried first as
    /// certificates for a failing deletion; used when the graph exceeds the
    /// subset cap.
    std::vector<VertexMask> candidate_sets;
};

/// All n-subsets V' of V: G - V' has an [a,b]-factor. Routes: direct
/// (find_ab_factor on each G - V') and criterion (δ_G(a,b;S) >= bn for every
/// S ⊇ V'). Premises: δ(G) >= a+n and I(G) >= a-1+n+(a-1)/b.
[[nodiscard]] AvoidanceVerdict check_vertex_deletion_all(const Graph& g, int a, int b, int n, const AvoidOptions& opt = {});

/// All n-subsets E' of E: G - E' has an S(m)-factor. Routes: criterion
/// (check_star_factor) and direct (find_star_factor). Premises: 1 <= n <=
/// m/2 (integer reading), δ(G) >= 1+n, I(G) >= 1/(m-n).
[[nodiscard]] AvoidanceVerdict check_edge_deletion_star(const Graph& g, int m, int n, const AvoidOptions& opt = {});

/// Matchings of exactly n edges, lexicographic by edge order.
[[nodiscard]] std::vector<std::vector<Edge>> enumerate_matchings(const Graph& g, int n, std::size_t limit);

/// All n-matchings M: G - M has an [a,b]-factor. Premises: δ(G) >= a+n,
/// I(G) >= a-1+(a+2n-1)/b.
[[nodiscard]] AvoidanceVerdict check_matching_deletion(const Graph& g, int a, int b, int n, const AvoidOptions& opt = {});

enum class Location { S, TPrime, WPrime };
[[nodiscard]] std::string to_string(Location loc);

/// Penalty of an edge e = uv against a set S: with G' = G - e and
/// T' = {x in V - S : d_{G'-S}(x) <= a-1}, value 2 if u, v in T'; 1 if one
/// is in T' and the other in W' = V - (S ∪ T'); 0 otherwise (including any
/// endpoint in S).
struct RhoValue {
    enum class Case { BothInT, OneInTOtherInW, Otherwise };
    int value = 0;
    Case branch = Case::Otherwise;
    Location u_location = Location::S;
    Location v_location = Location::S;
};

[[nodiscard]] RhoValue rho(const Graph& g, const Edge& e, VertexMask s, int a);

/// G - e has an [a,b]-factor. Routes: criterion (δ_G(a,b;S) >= ρ(S) for
/// every S) and direct (find_ab_factor(G - e)). Requires a < b.
[[nodiscard]] AvoidanceVerdict check_edge_avoiding(const Graph& g, const Edge& e, int a, int b, const AvoidOptions& opt = {});

/// Premises: δ(G) >= a+2 and G - {x,y} has an [a,b]-factor for every pair.
/// Conclusion: G - e has an [a,b]-factor for every edge, decided directly and
/// (within the subset cap) by the ρ criterion.
[[nodiscard]] AvoidanceVerdict check_theorem_E(const Graph& g, int a, int b, const AvoidOptions& opt = {});

/// Premises: δ(G) >= a+n and every n-subset deletion admits a factor.
/// Conclusion: every (n-1)-subset deletion admits a factor.
[[nodiscard]] AvoidanceVerdict check_theorem_D(const Graph& g, int a, int b, int n, const AvoidOptions& opt = {});

/// Premises: δ(G) >= a+n, I(G) >= a-1+(a+kn-1)/b. Conclusion:
/// δ_G(a,b;S) >= kn for every S with a nonempty low set. Throws
/// ThresholdError unless 2 <= k <= b.
[[nodiscard]] AvoidanceVerdict check_lemma_D1(const Graph& g, int a, int b, int n, int k, const AvoidOptions& opt = {});

/// The sharpness family evaluated end to end.
struct SharpnessReport {
    ExtremalWitness extremal;
    VertexMask deleted = 0;
    Fraction ratio;      // |S|/i(H-S) for S = both cliques
    Fraction threshold;  // a-1+n+(a-1)/b
    std::int64_t demand = 0;  // a|T| - d_{H-V0-S}(T) at S = small clique
    std::int64_t supply = 0;  // b|S|
    AvoidanceVerdict verdict;
};

[[nodiscard]] SharpnessReport check_sharpness(int m, int a, int b, int n, const AvoidOptions& opt = {});

using Params = std::vector<std::pair<std::string, std::int64_t>>;

/// Dispatches on `tag` with the parameter names a verdict records (a, b, n,
/// m, k, u, v). Throws std::invalid_argument for a missing parameter.
[[nodiscard]] AvoidanceVerdict check_theorem(TheoremTag tag, const Graph& g, const Params& params, const AvoidOptions& opt = {});

/// Inverse of to_string(TheoremTag); throws std::invalid_argument.
[[nodiscard]] TheoremTag parse_theorem(const std::string& name);

}  // namespace factorbench

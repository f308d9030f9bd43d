#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorbench/graph.hpp"
#include "factorbench/subset_scan.hpp"
#include "factorbench/toughness.hpp"

namespace factorbench {

/// Per-call enumeration limits. Exceeding one throws CapExceeded or
/// BudgetExceeded; nothing is ever skipped silently.
struct Caps {
    int subset_vertices = 16;                  // n limit for "for all S" scans
    int oracle_edges = 25;                     // |E| limit for brute_force_factor
    std::size_t gadget_vertices = 1U << 20;    // size limit of the matching reduction
    Execution exec = Execution::Serial;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A set S whose deficiency falls below the required bound, with the
/// low-degree set T it induces.
struct Violation {
    VertexMask s = 0;
    VertexMask t = 0;
    std::int64_t delta = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Either an existence verdict (optionally with explicit factor edges) or a
/// nonexistence verdict (with a violating set when one was computed).
struct FactorCertificate {
    bool exists = false;
    std::optional<std::vector<Edge>> factor;
    std::optional<Violation> violation;
};

/// T = {x in V - S : d_{G-S}(x) <= a - 1}.
[[nodiscard]] VertexMask low_set(const Graph& g, VertexMask s, int a);

/// δ_G(a,b;S) = b|S| - a|T| + d_{G-S}(T) with T = low_set(g, s, a).
[[nodiscard]] std::int64_t deficiency(const Graph& g, VertexMask s, int a, int b);

/// Same quantity evaluated over T' = {d_{G-S}(x) <= a}; equal to
/// deficiency() because every x with d = a contributes a - d = 0.
[[nodiscard]] std::int64_t deficiency_upper(const Graph& g, VertexMask s, int a, int b);

/// Criterion decision for a < b: exists iff δ_G(a,b;S) >= 0 for every S.
/// Returns the first failing S in size-then-lex order.
[[nodiscard]] FactorCertificate check_ab_factor(const Graph& g, int a, int b, const Caps& caps = {});

/// Per-vertex criterion for (g, f)-factors, valid when g(x) < f(x) for all x
/// or the graph is bipartite; otherwise UnsupportedError. Here
/// T = {x : d_{G-S}(x) <= g(x)} and delta = f(S) - g(T) + d_{G-S}(T).
[[nodiscard]] FactorCertificate check_gf_factor(const Graph& g, std::span<const int> lower, std::span<const int> upper,
                                                const Caps& caps = {});

/// Exact constructive search: a (lower, upper)-factor by reduction to a
/// perfect matching. Returns the factor edges or nullopt.
[[nodiscard]] std::optional<std::vector<Edge>> find_gf_factor(const Graph& g, std::span<const int> lower,
                                                              std::span<const int> upper, const Caps& caps = {});

/// Constructive [a,b]-factor (a = b allowed). On nonexistence with a < b
/// and n within caps.subset_vertices the violation from check_ab_factor is
/// attached.
[[nodiscard]] FactorCertificate find_ab_factor(const Graph& g, int a, int b, const Caps& caps = {});

/// Backtracking over edge subsets with degree pruning. Ground-truth oracle.
[[nodiscard]] std::optional<std::vector<Edge>> brute_force_gf_factor(const Graph& g, std::span<const int> lower,
                                                                     std::span<const int> upper, const Caps& caps = {});
[[nodiscard]] bool brute_force_factor(const Graph& g, int a, int b, const Caps& caps = {});

/// True iff `edges` are distinct edges of g and every vertex degree of the
/// spanning subgraph they form lies in [a, b].
[[nodiscard]] bool is_factor(const Graph& g, std::span<const Edge> edges, int a, int b);

// ---------------------------------------------------------------------------
// Star factors.

struct Star {
    int center = 0;
    std::vector<int> leaves;
};

using StarForest = std::vector<Star>;

/// Star-factor criterion. For m >= 2: i(G-S) <= m|S| for every S; the
/// violation stores T = isolated vertices of G-S and delta = m|S| - i(G-S).
/// For m = 1 a star factor is a perfect matching and the isolated-vertex
/// condition is not sufficient (K3 passes it), so the odd-component
/// condition is used instead: T = vertices of odd components,
/// delta = |S| - odd(G-S).
[[nodiscard]] FactorCertificate check_star_factor(const Graph& g, int m, const Caps& caps = {});

/// A spanning star forest with 1..m edges per star, or nullopt.
[[nodiscard]] std::optional<StarForest> find_star_factor(const Graph& g, int m, const Caps& caps = {});

/// Empty string when `forest` is a valid S(m)-factor of g, else the reason.
[[nodiscard]] std::string validate_star_forest(const Graph& g, const StarForest& forest, int m);

/// Number of odd components of G - S.
[[nodiscard]] int odd_components(const Graph& g, VertexMask removed, VertexMask* members = nullptr);

// ---------------------------------------------------------------------------
// Maximal independent set / cover pairs.

struct KaterinisPair {
    VertexMask independent = 0;
    VertexMask cover = 0;
    std::vector<int> independent_counts;  // index j = 1..a-1; entry 0 unused
    std::vector<int> cover_counts;
    std::int64_t lhs = 0;  // Σ (a-j) c_j
    std::int64_t rhs = 0;  // Σ j (a-j) i_j
};

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Maximal independent sets of g in a fixed deterministic order.
[[nodiscard]] std::vector<VertexMask> maximal_independent_sets(const Graph& g);

/// Finds a maximal independent set I of h and its complement cover C with
/// Σ_j (a-j)|S_j ∩ C| <= Σ_j j(a-j)|S_j ∩ I|, where vertex x lies in class
/// S_{classes[x]} and must satisfy d_h(x) <= classes[x] <= a-1. Throws
/// PartitionError for an invalid partition and std::logic_error if the
/// search exhausts, which such a pair's guaranteed existence rules out.
[[nodiscard]] KaterinisPair find_katerinis_pair(const Graph& h, std::span<const int> classes, int a);

/// Smallest valid class for every vertex: max(1, degree).
[[nodiscard]] std::vector<int> degree_ceiling_classes(const Graph& h);

}  // namespace factorbench

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "factorbench/fraction.hpp"
#include "factorbench/graph.hpp"

namespace factorbench {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Short-form graph6 (n <= 62). Trailing '\r' and '\n' are ignored.
[[nodiscard]] Graph parse_graph6(std::string_view line);
[[nodiscard]] std::string emit_graph6(const Graph& g);

/// G(n, p): each pair independently an edge with probability p, drawn from
/// std::mt19937_64 so the sequence is identical on every conforming platform.
[[nodiscard]] Graph generate_random(int n, const Fraction& p, std::uint64_t seed);

[[nodiscard]] Graph empty_graph(int n);
[[nodiscard]] Graph complete_graph(int n);
[[nodiscard]] Graph path_graph(int n);
[[nodiscard]] Graph cycle_graph(int n);
/// K_{1,t} with the center at vertex 0.
[[nodiscard]] Graph star_graph(int leaves);
/// Vertices of `second` are shifted by first.order().
[[nodiscard]] Graph disjoint_union(const Graph& first, const Graph& second);
/// Disjoint union plus every edge between the two parts.
[[nodiscard]] Graph join(const Graph& first, const Graph& second);

/// The sharpness family for the vertex-deletion toughness bound.
///
/// Layout: vertices [0, m(a-1)) form the small clique, the next mb+1 are the
/// independent row v_1..v_{mb+1}, the rest form the large clique of
/// (mb+1)(a-1+n) vertices whose first mb+1 members are u_1..u_{mb+1}.
struct ExtremalWitness {
    struct Params {
        int m = 1;
        int a = 1;
        int b = 2;
        int n = 1;
    };

    Graph graph;
    VertexMask clique_small = 0;
    VertexMask isolated_row = 0;
    VertexMask clique_large = 0;
    std::vector<Edge> pendant_pairs;  // (u_i, v_i) stored as Edge{v_i, u_i}
    Params params;

    /// (mb+1)(a-1+n) + m(a-1) over mb+1: |S|/i(H-S) for S = both cliques.
    [[nodiscard]] Fraction witness_ratio() const;
    /// The deleted n-set: the last n large-clique vertices (never a u_i).
    [[nodiscard]] VertexMask deletion_set() const;
};

/// Throws GraphError if the parameters are invalid or H exceeds 64 vertices.
[[nodiscard]] ExtremalWitness build_extremal(int m, int a, int b, int n);

}  // namespace factorbench

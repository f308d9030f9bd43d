#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace factorbench {

/// Vertex subset of a graph with at most 64 vertices; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

[[nodiscard]] constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
[[nodiscard]] constexpr int popcount(VertexMask m) { return std::popcount(m); }
[[nodiscard]] constexpr VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }

/// Sorted vertex list of a mask.
[[nodiscard]] std::vector<int> to_vector(VertexMask m);
[[nodiscard]] VertexMask to_mask(std::span<const int> vertices);
[[nodiscard]] inline VertexMask to_mask(std::initializer_list<int> vertices) {
    return to_mask(std::span<const int>(vertices.begin(), vertices.size()));
}

/// Lexicographic order on the sorted member lists ({0,3} < {0,3,5} < {0,5} < {1}).
[[nodiscard]] bool lex_less(VertexMask a, VertexMask b);
/// Size first, then lexicographic; the enumeration order of every subset scan.
[[nodiscard]] bool size_lex_less(VertexMask a, VertexMask b);

/// Undirected edge, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
    [[nodiscard]] bool touches(int x) const { return u == x || v == x; }
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built through the mutating helpers of its owner; every
/// algorithm takes graphs by const reference and returns new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int size() const { return edge_count_; }
    [[nodiscard]] VertexMask vertices() const { return full_mask(order()); }

    [[nodiscard]] VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int degree(int v) const { return popcount(neighbors(v)); }
    [[nodiscard]] bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }
    [[nodiscard]] bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

    /// Minimum degree; 0 for the empty graph.
    [[nodiscard]] int min_degree() const;
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] bool is_complete() const;
    [[nodiscard]] bool is_bipartite() const;

    /// Union of the neighborhoods of the members of `set`.
    [[nodiscard]] VertexMask neighborhood(VertexMask set) const;

    /// Degree of v in G - removed (v itself must not be in removed).
    [[nodiscard]] int degree_avoiding(int v, VertexMask removed) const { return popcount(neighbors(v) & ~removed); }

    /// Edges in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexMask> adj_;
    int edge_count_ = 0;
};

/// i(G - S): vertices outside S with no neighbor outside S.
[[nodiscard]] int isolated_count(const Graph& g, VertexMask removed);
/// Mask form of the same set.
[[nodiscard]] VertexMask isolated_vertices(const Graph& g, VertexMask removed);

/// Pairwise vertex-disjoint check for a matching.
[[nodiscard]] bool is_matching(std::span<const Edge> edges);

/// The avoided object of a deletion.
struct DeletionSpec {
    enum class Kind { Vertices, Edges, Matching, SingleEdge };
    Kind kind = Kind::Vertices;
    std::vector<int> vertices;
    std::vector<Edge> edges;

    static DeletionSpec of_vertices(std::vector<int> vs) { return {Kind::Vertices, std::move(vs), {}}; }
    static DeletionSpec of_edges(std::vector<Edge> es) { return {Kind::Edges, {}, std::move(es)}; }
    static DeletionSpec of_matching(std::vector<Edge> es) { return {Kind::Matching, {}, std::move(es)}; }
    static DeletionSpec of_edge(Edge e) { return {Kind::SingleEdge, {}, {e}}; }
};

[[nodiscard]] std::string to_string(DeletionSpec::Kind kind);

/// Result of a deletion. `original[i]` is the label in the host graph of
/// vertex i of `graph`; the map is order preserving.
struct Deleted {
    Graph graph;
    std::vector<int> original;

    [[nodiscard]] VertexMask lift(VertexMask local) const;
    [[nodiscard]] Edge lift(const Edge& e) const { return {original[static_cast<std::size_t>(e.u)], original[static_cast<std::size_t>(e.v)]}; }
};

/// G - V', G - E', G - M or G - e. Throws GraphError naming a missing member.
[[nodiscard]] Deleted remove(const Graph& g, const DeletionSpec& spec);
[[nodiscard]] Graph remove_vertices(const Graph& g, VertexMask removed, std::vector<int>* original = nullptr);
[[nodiscard]] Graph remove_edges(const Graph& g, std::span<const Edge> edges);

/// Induced subgraph on `keep`, relabelled in increasing order.
[[nodiscard]] Graph induced(const Graph& g, VertexMask keep);

}  // namespace factorbench

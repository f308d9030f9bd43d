#include "factorbench/graph.hpp"

#include <algorithm>
#include <queue>

namespace factorbench {

std::vector<int> to_vector(VertexMask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

VertexMask to_mask(std::span<const int> vertices) {
    VertexMask m = 0;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices) throw GraphError("vertex " + std::to_string(v) + " out of range");
        m |= bit(v);
    }
    return m;
}

bool lex_less(VertexMask a, VertexMask b) {
    const VertexMask diff = a ^ b;
    if (diff == 0) return false;
    const int t = std::countr_zero(diff);
    // Both lists agree below t. Whoever holds t has the smaller element at
    // that position unless the other list has already ended.
    const VertexMask at_or_above = ~(bit(t) - 1);
    if ((a >> t) & 1U) return (b & at_or_above) != 0;
    return (a & at_or_above) == 0;
}

bool size_lex_less(VertexMask a, VertexMask b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    if (pa != pb) return pa < pb;
    return lex_less(a, b);
}

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) throw GraphError("vertex count " + std::to_string(n) + " outside [0, 64]");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order()) throw GraphError("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(order()));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!adjacent(u, v)) throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
    adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    adj_[static_cast<std::size_t>(v)] &= ~bit(u);
    --edge_count_;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = kMaxVertices;
    for (VertexMask m : adj_) d = std::min(d, popcount(m));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (VertexMask m : adj_) d = std::max(d, popcount(m));
    return d;
}

bool Graph::is_complete() const {
    const VertexMask all = vertices();
    for (int v = 0; v < order(); ++v)
        if ((adj_[static_cast<std::size_t>(v)] | bit(v)) != all) return false;
    return true;
}

bool Graph::is_bipartite() const {
    std::vector<int> side(adj_.size(), -1);
    for (int s = 0; s < order(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int y : to_vector(neighbors(x))) {
                auto& sy = side[static_cast<std::size_t>(y)];
                if (sy == -1) {
                    sy = 1 - side[static_cast<std::size_t>(x)];
                    q.push(y);
                } else if (sy == side[static_cast<std::size_t>(x)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

VertexMask Graph::neighborhood(VertexMask set) const {
    VertexMask out = 0;
    while (set != 0) {
        out |= neighbors(std::countr_zero(set));
        set &= set - 1;
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u) {
        VertexMask later = neighbors(u) & ~full_mask(u + 1);
        while (later != 0) {
            out.emplace_back(u, std::countr_zero(later));
            later &= later - 1;
        }
    }
    return out;
}

VertexMask isolated_vertices(const Graph& g, VertexMask removed) {
    VertexMask out = 0;
    VertexMask rest = g.vertices() & ~removed;
    for (VertexMask m = rest; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        if ((g.neighbors(v) & rest) == 0) out |= bit(v);
    }
    return out;
}

int isolated_count(const Graph& g, VertexMask removed) { return popcount(isolated_vertices(g, removed)); }

bool is_matching(std::span<const Edge> edges) {
    VertexMask used = 0;
    for (const Edge& e : edges) {
        const VertexMask ends = bit(e.u) | bit(e.v);
        if (e.u == e.v || (used & ends) != 0) return false;
        used |= ends;
    }
    return true;
}

std::string to_string(DeletionSpec::Kind kind) {
    switch (kind) {
        case DeletionSpec::Kind::Vertices: return "vertices";
        case DeletionSpec::Kind::Edges: return "edges";
        case DeletionSpec::Kind::Matching: return "matching";
        case DeletionSpec::Kind::SingleEdge: return "edge";
    }
    return "?";
}

VertexMask Deleted::lift(VertexMask local) const {
    VertexMask out = 0;
    for (int v : to_vector(local)) out |= bit(original[static_cast<std::size_t>(v)]);
    return out;
}

Graph remove_vertices(const Graph& g, VertexMask removed, std::vector<int>* original) {
    std::vector<int> keep = to_vector(g.vertices() & ~removed);
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    Graph out(static_cast<int>(keep.size()));
    for (const Edge& e : g.edges()) {
        const int a = local[static_cast<std::size_t>(e.u)];
        const int b = local[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) out.add_edge(a, b);
    }
    if (original != nullptr) *original = std::move(keep);
    return out;
}

Graph induced(const Graph& g, VertexMask keep) { return remove_vertices(g, g.vertices() & ~keep); }

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
    Graph out = g;
    for (const Edge& e : edges) out.remove_edge(e.u, e.v);
    return out;
}

Deleted remove(const Graph& g, const DeletionSpec& spec) {
    Deleted out;
    switch (spec.kind) {
        case DeletionSpec::Kind::Vertices: {
            VertexMask removed = 0;
            for (int v : spec.vertices) {
                if (v < 0 || v >= g.order()) throw GraphError("cannot delete vertex " + std::to_string(v) + ": not in graph");
                removed |= bit(v);
            }
            out.graph = remove_vertices(g, removed, &out.original);
            return out;
        }
        case DeletionSpec::Kind::Matching:
            if (!is_matching(spec.edges)) throw GraphError("deletion set is not a matching");
            [[fallthrough]];
        case DeletionSpec::Kind::Edges:
        case DeletionSpec::Kind::SingleEdge:
            for (const Edge& e : spec.edges) {
                if (e.u < 0 || e.v >= g.order() || !g.has_edge(e))
                    throw GraphError("cannot delete edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + ": not in graph");
            }
            out.graph = remove_edges(g, spec.edges);
            out.original.resize(static_cast<std::size_t>(g.order()));
            for (int v = 0; v < g.order(); ++v) out.original[static_cast<std::size_t>(v)] = v;
            return out;
    }
    return out;
}

}  // namespace factorbench

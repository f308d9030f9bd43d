#include "factorbench/graph_io.hpp"

#include <random>

namespace factorbench {

namespace {

constexpr int kGraph6MaxOrder = 62;
constexpr char kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw Graph6Error("empty graph6 line", 0);
    const auto header = static_cast<unsigned char>(line[0]);
    if (header == 126) throw Graph6Error("long-form graph6 header (n > 62) is unsupported", 0);
    if (header < 63 || header > 126) throw Graph6Error("invalid graph6 header byte", 0);
    const int n = header - kBias;
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() != bytes + 1) {
        const std::size_t at = line.size() < bytes + 1 ? line.size() : bytes + 1;
        throw Graph6Error("expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) + ", got " +
                              std::to_string(line.size() - 1),
                          at);
    }
    Graph g(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < bytes; ++i) {
        const auto c = static_cast<unsigned char>(line[i + 1]);
        if (c < 63 || c > 126) throw Graph6Error("invalid graph6 data byte", i + 1);
        const int value = c - kBias;
        for (int shift = 5; shift >= 0; --shift, ++k) {
            const bool set = (value >> shift) & 1;
            if (k >= bits) {
                if (set) throw Graph6Error("nonzero padding bit", i + 1);
                continue;
            }
            if (!set) continue;
            // Bits run over the upper triangle column by column.
            int col = 1;
            std::size_t before = 0;
            while (before + static_cast<std::size_t>(col) <= k) {
                before += static_cast<std::size_t>(col);
                ++col;
            }
            g.add_edge(static_cast<int>(k - before), col);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw GraphError("graph6 output supports n <= 62, got n=" + std::to_string(n));
    std::string out(1, static_cast<char>(n + kBias));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph generate_random(int n, const Fraction& p, std::uint64_t seed) {
    if (p < Fraction(0) || p > Fraction(1)) throw std::invalid_argument("edge probability outside [0, 1]: " + p.str());
    std::mt19937_64 rng(seed);
    Graph g(n);
    const auto num = static_cast<unsigned __int128>(p.num());
    const auto den = static_cast<unsigned __int128>(p.den());
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // r / 2^64 < num / den, exactly.
            const auto r = static_cast<unsigned __int128>(rng());
            if (r * den < (num << 64)) g.add_edge(u, v);
        }
    }
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph disjoint_union(const Graph& first, const Graph& second) {
    const int shift = first.order();
    Graph g(shift + second.order());
    for (const Edge& e : first.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : second.edges()) g.add_edge(e.u + shift, e.v + shift);
    return g;
}

Graph join(const Graph& first, const Graph& second) {
    Graph g = disjoint_union(first, second);
    for (int u = 0; u < first.order(); ++u)
        for (int v = 0; v < second.order(); ++v) g.add_edge(u, first.order() + v);
    return g;
}

Fraction ExtremalWitness::witness_ratio() const {
    const auto& [m, a, b, n] = params;
    const std::int64_t rows = static_cast<std::int64_t>(m) * b + 1;
    return Fraction(rows * (a - 1 + n) + static_cast<std::int64_t>(m) * (a - 1), rows);
}

VertexMask ExtremalWitness::deletion_set() const {
    std::vector<int> large = to_vector(clique_large);
    const auto free = large.size() - pendant_pairs.size();
    if (free < static_cast<std::size_t>(params.n))
        throw GraphError("large clique has only " + std::to_string(free) + " vertices outside the pendant matching");
    VertexMask out = 0;
    for (int i = 0; i < params.n; ++i) out |= bit(large[large.size() - 1 - static_cast<std::size_t>(i)]);
    return out;
}

ExtremalWitness build_extremal(int m, int a, int b, int n) {
    if (m < 1 || a < 1 || b <= a || n < 1)
        throw GraphError("extremal family needs m >= 1, 1 <= a < b, n >= 1");
    const int small = m * (a - 1);
    const int rows = m * b + 1;
    const int large = rows * (a - 1 + n);
    const int total = small + rows + large;
    if (total > kMaxVertices)
        throw GraphError("extremal graph has " + std::to_string(total) + " vertices; at most 64 supported");

    ExtremalWitness w;
    w.params = {m, a, b, n};
    w.graph = Graph(total);
    const int row0 = small;
    const int large0 = small + rows;
    for (int v = 0; v < small; ++v) w.clique_small |= bit(v);
    for (int v = row0; v < large0; ++v) w.isolated_row |= bit(v);
    for (int v = large0; v < total; ++v) w.clique_large |= bit(v);

    for (int u = 0; u < small; ++u) {
        for (int v = u + 1; v < small; ++v) w.graph.add_edge(u, v);
        for (int v = row0; v < large0; ++v) w.graph.add_edge(u, v);
    }
    for (int u = large0; u < total; ++u)
        for (int v = u + 1; v < total; ++v) w.graph.add_edge(u, v);
    for (int i = 0; i < rows; ++i) {
        w.graph.add_edge(row0 + i, large0 + i);
        w.pendant_pairs.emplace_back(row0 + i, large0 + i);
    }
    return w;
}

}  // namespace factorbench

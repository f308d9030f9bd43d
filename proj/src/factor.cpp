#include "factorbench/factor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "factorbench/matching.hpp"

namespace factorbench {

namespace {

void require_subset_cap(const Graph& g, const Caps& caps, const char* what) {
    if (g.order() > caps.subset_vertices)
        throw CapExceeded(std::string(what) + ": n=" + std::to_string(g.order()) + " exceeds subset cap " +
                          std::to_string(caps.subset_vertices));
}

std::vector<int> uniform(const Graph& g, int value) { return std::vector<int>(static_cast<std::size_t>(g.order()), value); }

}  // namespace

VertexMask low_set(const Graph& g, VertexMask s, int a) {
    const VertexMask rest = g.vertices() & ~s;
    VertexMask t = 0;
    for (VertexMask m = rest; m != 0; m &= m - 1) {
        const int x = std::countr_zero(m);
        if (popcount(g.neighbors(x) & rest) <= a - 1) t |= bit(x);
    }
    return t;
}

std::int64_t deficiency(const Graph& g, VertexMask s, int a, int b) {
    const VertexMask rest = g.vertices() & ~s;
    std::int64_t value = static_cast<std::int64_t>(b) * popcount(s);
    for (VertexMask m = rest; m != 0; m &= m - 1) {
        const int x = std::countr_zero(m);
        const int d = popcount(g.neighbors(x) & rest);
        if (d <= a - 1) value += d - a;
    }
    return value;
}

std::int64_t deficiency_upper(const Graph& g, VertexMask s, int a, int b) {
    const VertexMask rest = g.vertices() & ~s;
    std::int64_t size_t_prime = 0;
    std::int64_t degree_sum = 0;
    for (VertexMask m = rest; m != 0; m &= m - 1) {
        const int x = std::countr_zero(m);
        const int d = popcount(g.neighbors(x) & rest);
        if (d <= a) {
            ++size_t_prime;
            degree_sum += d;
        }
    }
    return static_cast<std::int64_t>(b) * popcount(s) - a * size_t_prime + degree_sum;
}

FactorCertificate check_ab_factor(const Graph& g, int a, int b, const Caps& caps) {
    if (a < 0) throw std::invalid_argument("check_ab_factor: a must be nonnegative");
    if (a >= b) throw UnsupportedError("check_ab_factor: the subset criterion needs a < b (got a=" + std::to_string(a) +
                                       ", b=" + std::to_string(b) + ")");
    require_subset_cap(g, caps, "check_ab_factor");
    const auto hit = first_subset(caps.exec, g.order(), [&](VertexMask s) { return deficiency(g, s, a, b) < 0; });
    FactorCertificate cert;
    if (!hit) {
        cert.exists = true;
        return cert;
    }
    cert.violation = Violation{*hit, low_set(g, *hit, a), deficiency(g, *hit, a, b)};
    return cert;
}

FactorCertificate check_gf_factor(const Graph& g, std::span<const int> lower, std::span<const int> upper,
                                  const Caps& caps) {
    const auto n = static_cast<std::size_t>(g.order());
    if (lower.size() != n || upper.size() != n) throw std::invalid_argument("check_gf_factor: bound vectors must have one entry per vertex");
    bool strict = true;
    for (std::size_t v = 0; v < n; ++v) {
        if (lower[v] < 0 || lower[v] > upper[v])
            throw std::invalid_argument("check_gf_factor: need 0 <= g(x) <= f(x) at vertex " + std::to_string(v));
        strict = strict && lower[v] < upper[v];
    }
    if (!strict && !g.is_bipartite())
        throw UnsupportedError("check_gf_factor: criterion requires g(x) < f(x) for every x or a bipartite graph");
    require_subset_cap(g, caps, "check_gf_factor");

    auto evaluate = [&](VertexMask s, VertexMask* t_out) {
        const VertexMask rest = g.vertices() & ~s;
        std::int64_t value = 0;
        for (VertexMask m = s; m != 0; m &= m - 1) value += upper[static_cast<std::size_t>(std::countr_zero(m))];
        VertexMask t = 0;
        for (VertexMask m = rest; m != 0; m &= m - 1) {
            const int x = std::countr_zero(m);
            const int d = popcount(g.neighbors(x) & rest);
            const int gx = lower[static_cast<std::size_t>(x)];
            if (d <= gx) {
                t |= bit(x);
                value += d - gx;
            }
        }
        if (t_out != nullptr) *t_out = t;
        return value;
    };
    const auto hit = first_subset(caps.exec, g.order(), [&](VertexMask s) { return evaluate(s, nullptr) < 0; });
    FactorCertificate cert;
    if (!hit) {
        cert.exists = true;
        return cert;
    }
    Violation v;
    v.s = *hit;
    v.delta = evaluate(*hit, &v.t);
    cert.violation = v;
    return cert;
}

std::optional<std::vector<Edge>> find_gf_factor(const Graph& g, std::span<const int> lower, std::span<const int> upper,
                                                const Caps& caps) {
    // Gadget: every edge e = xy gets an outer vertex at each end, joined to
    // each other. Vertex x with degree d and bounds [lo, hi'] (hi' = min(hi, d))
    // gets d - hi' mandatory inner vertices and hi' - lo optional ones, both
    // complete to x's outer vertices. Optional vertices of all graph
    // vertices form one clique (plus one spare vertex when the total count
    // is odd) so the unused ones pair up among themselves. A perfect
    // matching then matches between lo and hi' outer vertices of x across
    // their edge, and those edges form the factor.
    const auto n = static_cast<std::size_t>(g.order());
    if (lower.size() != n || upper.size() != n) throw std::invalid_argument("find_gf_factor: bound vectors must have one entry per vertex");
    const std::vector<Edge> edges = g.edges();
    std::vector<std::vector<int>> outer(n);
    std::vector<int> mandatory(n);
    std::vector<int> optional(n);
    std::size_t total = 2 * edges.size();
    for (std::size_t v = 0; v < n; ++v) {
        const int d = g.degree(static_cast<int>(v));
        if (lower[v] < 0 || lower[v] > upper[v]) throw std::invalid_argument("find_gf_factor: need 0 <= lower <= upper at vertex " + std::to_string(v));
        if (lower[v] > d) return std::nullopt;
        const int hi = std::min(upper[v], d);
        mandatory[v] = d - hi;
        optional[v] = hi - lower[v];
        total += static_cast<std::size_t>(mandatory[v] + optional[v]);
    }
    const bool spare = total % 2 != 0;
    total += spare ? 1 : 0;
    if (total > caps.gadget_vertices)
        throw BudgetExceeded("factor search budget exceeded: gadget needs " + std::to_string(total) + " vertices, budget " +
                             std::to_string(caps.gadget_vertices));

    BlossomMatcher matcher(static_cast<int>(total));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const int x = static_cast<int>(2 * e);
        outer[static_cast<std::size_t>(edges[e].u)].push_back(x);
        outer[static_cast<std::size_t>(edges[e].v)].push_back(x + 1);
        matcher.add_edge(x, x + 1);
    }
    int next = static_cast<int>(2 * edges.size());
    std::vector<int> pool;
    for (std::size_t v = 0; v < n; ++v) {
        for (int i = 0; i < mandatory[v] + optional[v]; ++i, ++next) {
            for (int o : outer[v]) matcher.add_edge(next, o);
            if (i >= mandatory[v]) pool.push_back(next);
        }
    }
    if (spare) pool.push_back(next++);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) matcher.add_edge(pool[i], pool[j]);

    if (!matcher.perfect()) return std::nullopt;
    std::vector<Edge> factor;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (matcher.mate()[2 * e] == static_cast<int>(2 * e + 1)) factor.push_back(edges[e]);
    return factor;
}

FactorCertificate find_ab_factor(const Graph& g, int a, int b, const Caps& caps) {
    if (a < 0 || a > b) throw std::invalid_argument("find_ab_factor: need 0 <= a <= b");
    FactorCertificate cert;
    if (a == 0) {
        cert.exists = true;
        cert.factor = std::vector<Edge>{};
        return cert;
    }
    const auto lo = uniform(g, a);
    const auto hi = uniform(g, b);
    if (auto factor = find_gf_factor(g, lo, hi, caps)) {
        cert.exists = true;
        cert.factor = std::move(*factor);
        return cert;
    }
    if (a < b && g.order() <= caps.subset_vertices) {
        FactorCertificate criterion = check_ab_factor(g, a, b, caps);
        if (criterion.exists) throw std::logic_error("find_ab_factor: matching reduction and subset criterion disagree");
        cert.violation = criterion.violation;
    }
    return cert;
}

std::optional<std::vector<Edge>> brute_force_gf_factor(const Graph& g, std::span<const int> lower, std::span<const int> upper,
                                                       const Caps& caps) {
    const auto n = static_cast<std::size_t>(g.order());
    if (lower.size() != n || upper.size() != n) throw std::invalid_argument("brute_force_gf_factor: bound vectors must have one entry per vertex");
    if (g.size() > caps.oracle_edges)
        throw CapExceeded("brute_force_factor: |E|=" + std::to_string(g.size()) + " exceeds oracle cap " +
                          std::to_string(caps.oracle_edges));
    const std::vector<Edge> edges = g.edges();
    std::vector<int> deg(n, 0);
    std::vector<int> remaining(n);
    for (std::size_t v = 0; v < n; ++v) {
        remaining[v] = g.degree(static_cast<int>(v));
        if (remaining[v] < lower[v]) return std::nullopt;
    }
    std::vector<char> chosen(edges.size(), 0);

    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == edges.size()) {
            for (std::size_t v = 0; v < n; ++v)
                if (deg[v] < lower[v]) return false;
            return true;
        }
        const auto u = static_cast<std::size_t>(edges[i].u);
        const auto v = static_cast<std::size_t>(edges[i].v);
        --remaining[u];
        --remaining[v];
        if (deg[u] < upper[u] && deg[v] < upper[v]) {
            ++deg[u];
            ++deg[v];
            chosen[i] = 1;
            if (search(i + 1)) return true;
            chosen[i] = 0;
            --deg[u];
            --deg[v];
        }
        if (deg[u] + remaining[u] >= lower[u] && deg[v] + remaining[v] >= lower[v] && search(i + 1)) return true;
        ++remaining[u];
        ++remaining[v];
        return false;
    };
    if (!search(0)) return std::nullopt;
    std::vector<Edge> factor;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (chosen[i]) factor.push_back(edges[i]);
    return factor;
}

bool brute_force_factor(const Graph& g, int a, int b, const Caps& caps) {
    if (a < 0 || a > b) throw std::invalid_argument("brute_force_factor: need 0 <= a <= b");
    return brute_force_gf_factor(g, uniform(g, a), uniform(g, b), caps).has_value();
}

bool is_factor(const Graph& g, std::span<const Edge> edges, int a, int b) {
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e)) return false;
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return std::all_of(deg.begin(), deg.end(), [&](int d) { return a <= d && d <= b; });
}

// ---------------------------------------------------------------------------

int odd_components(const Graph& g, VertexMask removed, VertexMask* members) {
    VertexMask rest = g.vertices() & ~removed;
    VertexMask odd_members = 0;
    int count = 0;
    while (rest != 0) {
        VertexMask comp = rest & (~rest + 1);
        VertexMask frontier = comp;
        while (frontier != 0) {
            const VertexMask grown = (g.neighborhood(frontier) & rest) & ~comp;
            comp |= grown;
            frontier = grown;
        }
        rest &= ~comp;
        if (popcount(comp) % 2 == 1) {
            ++count;
            odd_members |= comp;
        }
    }
    if (members != nullptr) *members = odd_members;
    return count;
}

FactorCertificate check_star_factor(const Graph& g, int m, const Caps& caps) {
    if (m < 1) throw std::invalid_argument("check_star_factor: m must be at least 1");
    require_subset_cap(g, caps, "check_star_factor");
    FactorCertificate cert;
    if (m == 1) {
        const auto hit = first_subset(caps.exec, g.order(), [&](VertexMask s) { return odd_components(g, s) > popcount(s); });
        if (!hit) {
            cert.exists = true;
            return cert;
        }
        Violation v;
        v.s = *hit;
        v.delta = popcount(*hit) - odd_components(g, *hit, &v.t);
        cert.violation = v;
        return cert;
    }
    const auto hit = first_subset(caps.exec, g.order(), [&](VertexMask s) { return isolated_count(g, s) > m * popcount(s); });
    if (!hit) {
        cert.exists = true;
        return cert;
    }
    const VertexMask iso = isolated_vertices(g, *hit);
    cert.violation = Violation{*hit, iso, static_cast<std::int64_t>(m) * popcount(*hit) - popcount(iso)};
    return cert;
}

std::optional<StarForest> find_star_factor(const Graph& g, int m, const Caps& caps) {
    if (m < 1) throw std::invalid_argument("find_star_factor: m must be at least 1");
    const FactorCertificate cert = find_ab_factor(g, 1, m, caps);
    if (!cert.exists) return std::nullopt;
    const Graph f(g.order(), *cert.factor);

    // Peel each component of a BFS spanning tree of the [1,m]-factor from
    // the bottom: the parent of the deepest unassigned vertex becomes a
    // center holding all of its unassigned children.
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> parent(n, -1);
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    std::vector<int> roots;
    for (int r = 0; r < g.order(); ++r) {
        if (seen[static_cast<std::size_t>(r)]) continue;
        roots.push_back(r);
        seen[static_cast<std::size_t>(r)] = 1;
        std::size_t head = order.size();
        order.push_back(r);
        for (; head < order.size(); ++head) {
            const int x = order[head];
            for (int y : to_vector(f.neighbors(x))) {
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                parent[static_cast<std::size_t>(y)] = x;
                order.push_back(y);
            }
        }
    }

    StarForest forest;
    std::vector<int> star_of(n, -1);
    std::vector<char> assigned(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        const int p = parent[static_cast<std::size_t>(v)];
        if (assigned[static_cast<std::size_t>(v)] || p < 0) continue;
        Star star{p, {}};
        for (int c : to_vector(f.neighbors(p))) {
            if (parent[static_cast<std::size_t>(c)] == p && !assigned[static_cast<std::size_t>(c)]) {
                star.leaves.push_back(c);
                assigned[static_cast<std::size_t>(c)] = 1;
            }
        }
        assigned[static_cast<std::size_t>(p)] = 1;
        star_of[static_cast<std::size_t>(p)] = static_cast<int>(forest.size());
        forest.push_back(std::move(star));
    }
    for (int r : roots) {
        if (assigned[static_cast<std::size_t>(r)]) continue;
        // Stranded root: every child of r is a center whose tree degree
        // counts the edge to r, so its star has at most m - 1 leaves.
        int child = -1;
        for (int c : to_vector(f.neighbors(r)))
            if (parent[static_cast<std::size_t>(c)] == r) {
                child = c;
                break;
            }
        if (child < 0 || star_of[static_cast<std::size_t>(child)] < 0)
            throw std::logic_error("find_star_factor: isolated root in a [1,m]-factor");
        forest[static_cast<std::size_t>(star_of[static_cast<std::size_t>(child)])].leaves.push_back(r);
        assigned[static_cast<std::size_t>(r)] = 1;
    }
    for (Star& s : forest) std::sort(s.leaves.begin(), s.leaves.end());
    std::sort(forest.begin(), forest.end(), [](const Star& x, const Star& y) {
        return std::min(x.center, x.leaves.front()) < std::min(y.center, y.leaves.front());
    });
    return forest;
}

std::string validate_star_forest(const Graph& g, const StarForest& forest, int m) {
    VertexMask covered = 0;
    for (const Star& s : forest) {
        if (s.leaves.empty()) return "star centered at " + std::to_string(s.center) + " has no leaves";
        if (static_cast<int>(s.leaves.size()) > m)
            return "star centered at " + std::to_string(s.center) + " has " + std::to_string(s.leaves.size()) + " > m leaves";
        std::vector<int> members = s.leaves;
        members.push_back(s.center);
        for (int x : members) {
            if (x < 0 || x >= g.order()) return "vertex " + std::to_string(x) + " out of range";
            if ((covered >> x) & 1U) return "vertex " + std::to_string(x) + " appears in two stars";
            covered |= bit(x);
        }
        for (int leaf : s.leaves)
            if (!g.adjacent(s.center, leaf)) return "pair " + std::to_string(s.center) + "-" + std::to_string(leaf) + " is not an edge";
    }
    if (covered != g.vertices()) return "stars do not cover every vertex";
    return {};
}

// ---------------------------------------------------------------------------

std::vector<VertexMask> maximal_independent_sets(const Graph& g) {
    // Bron-Kerbosch with pivoting on the complement graph.
    const VertexMask all = g.vertices();
    auto non_neighbors = [&](int v) { return all & ~g.neighbors(v) & ~bit(v); };
    std::vector<VertexMask> out;
    std::function<void(VertexMask, VertexMask, VertexMask)> expand = [&](VertexMask r, VertexMask p, VertexMask x) {
        if (p == 0 && x == 0) {
            out.push_back(r);
            return;
        }
        const VertexMask px = p | x;
        int pivot = std::countr_zero(px);
        int best = -1;
        for (VertexMask m = px; m != 0; m &= m - 1) {
            const int u = std::countr_zero(m);
            const int cover = popcount(p & non_neighbors(u));
            if (cover > best) {
                best = cover;
                pivot = u;
            }
        }
        for (VertexMask m = p & ~non_neighbors(pivot); m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (((p >> v) & 1U) == 0) continue;
            expand(r | bit(v), p & non_neighbors(v), x & non_neighbors(v));
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    if (g.order() == 0) return {0};
    expand(0, all, 0);
    return out;
}

std::vector<int> degree_ceiling_classes(const Graph& h) {
    std::vector<int> classes(static_cast<std::size_t>(h.order()));
    for (int v = 0; v < h.order(); ++v) classes[static_cast<std::size_t>(v)] = std::max(1, h.degree(v));
    return classes;
}

KaterinisPair find_katerinis_pair(const Graph& h, std::span<const int> classes, int a) {
    if (a < 2) throw PartitionError("find_katerinis_pair: a must be at least 2");
    if (classes.size() != static_cast<std::size_t>(h.order()))
        throw PartitionError("find_katerinis_pair: partition must assign every vertex");
    for (int v = 0; v < h.order(); ++v) {
        const int j = classes[static_cast<std::size_t>(v)];
        if (j < 1 || j > a - 1)
            throw PartitionError("vertex " + std::to_string(v) + " assigned to class " + std::to_string(j) + " outside 1.." +
                                 std::to_string(a - 1));
        if (h.degree(v) > j)
            throw PartitionError("vertex " + std::to_string(v) + " has degree " + std::to_string(h.degree(v)) +
                                 " > class index " + std::to_string(j));
    }
    for (VertexMask independent : maximal_independent_sets(h)) {
        KaterinisPair pair;
        pair.independent = independent;
        pair.cover = h.vertices() & ~independent;
        pair.independent_counts.assign(static_cast<std::size_t>(a), 0);
        pair.cover_counts.assign(static_cast<std::size_t>(a), 0);
        for (int v = 0; v < h.order(); ++v) {
            const auto j = static_cast<std::size_t>(classes[static_cast<std::size_t>(v)]);
            if ((independent >> v) & 1U)
                ++pair.independent_counts[j];
            else
                ++pair.cover_counts[j];
        }
        for (int j = 1; j <= a - 1; ++j) {
            pair.lhs += static_cast<std::int64_t>(a - j) * pair.cover_counts[static_cast<std::size_t>(j)];
            pair.rhs += static_cast<std::int64_t>(j) * (a - j) * pair.independent_counts[static_cast<std::size_t>(j)];
        }
        if (pair.lhs <= pair.rhs) return pair;
    }
    throw std::logic_error("find_katerinis_pair: no maximal independent set satisfies the inequality");
}

}  // namespace factorbench

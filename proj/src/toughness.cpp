#include "factorbench/toughness.hpp"

#include <cassert>
#include <optional>

namespace factorbench {

namespace {

struct Candidate {
    Fraction value;
    VertexMask set = 0;
    int isolated = 0;
    bool valid = false;

    [[nodiscard]] bool better_than(const Candidate& other) const {
        if (!other.valid) return valid;
        if (!valid) return false;
        if (value != other.value) return value < other.value;
        return lex_less(set, other.set);
    }
};

ToughnessReport complete_report(const Graph& g) { return {Fraction(g.order() - 1), 0, 0}; }

void require_nonempty(const Graph& g) {
    if (g.order() == 0) throw GraphError("isolated toughness of the empty graph is undefined");
}

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const Graph& g) : g_(g), n_(g.order()) {}

    Candidate run() {
        extend(0, 0, 0, 0);
        return best_;
    }

private:
    void extend(VertexMask chosen, VertexMask blocked, int next, int size) {
        if (size >= 2) {
            consider(chosen);
            if (stop_) return;
        }
        const VertexMask nbhd = g_.neighborhood(chosen);
        if (size >= 1 && best_.valid) {
            // Every extension J has N(J) ⊇ N(I) and at most n - |N(J)|
            // isolated vertices, so |N(I)| / (n - |N(I)|) bounds its ratio.
            const int s = popcount(nbhd);
            if (Fraction(s, n_ - s) > best_.value) return;
        }
        for (int v = next; v < n_; ++v) {
            if ((blocked >> v) & 1U) continue;
            extend(chosen | bit(v), blocked | bit(v) | g_.neighbors(v), v + 1, size + 1);
            if (stop_) return;
        }
    }

    void consider(VertexMask independent) {
        const VertexMask s = g_.neighborhood(independent);
        const int iso = isolated_count(g_, s);
        assert(iso >= popcount(independent));
        Candidate c{Fraction(popcount(s), iso), s, iso, true};
        if (c.better_than(best_)) best_ = c;
        // Ratio zero is only reached by S = ∅, the smallest set in any order.
        if (best_.value == Fraction(0)) stop_ = true;
    }

    const Graph& g_;
    int n_;
    Candidate best_;
    bool stop_ = false;
};

}  // namespace

ToughnessReport isolated_toughness_bruteforce(const Graph& g, int cap, Execution exec) {
    require_nonempty(g);
    if (g.order() > cap)
        throw CapExceeded("brute-force isolated toughness refused: n=" + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(cap));
    if (g.is_complete()) return complete_report(g);

    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << g.order());
    Candidate best;
    if (exec == Execution::Parallel) {
#pragma omp parallel
        {
            Candidate local;
#pragma omp for schedule(static)
            for (std::int64_t s = 0; s < total; ++s) {
                const int iso = isolated_count(g, static_cast<VertexMask>(s));
                if (iso < 2) continue;
                Candidate c{Fraction(popcount(static_cast<VertexMask>(s)), iso), static_cast<VertexMask>(s), iso, true};
                if (c.better_than(local)) local = c;
            }
#pragma omp critical(factorbench_toughness_reduce)
            if (local.better_than(best)) best = local;
        }
    } else {
        for (std::int64_t s = 0; s < total; ++s) {
            const int iso = isolated_count(g, static_cast<VertexMask>(s));
            if (iso < 2) continue;
            Candidate c{Fraction(popcount(static_cast<VertexMask>(s)), iso), static_cast<VertexMask>(s), iso, true};
            if (c.better_than(best)) best = c;
        }
    }
    // A non-complete graph has nonadjacent u, v and S = V \ {u, v} isolates both.
    if (!best.valid) throw std::logic_error("non-complete graph without a set isolating two vertices");
    return {best.value, best.set, best.isolated};
}

ToughnessReport isolated_toughness(const Graph& g) {
    require_nonempty(g);
    if (g.is_complete()) return complete_report(g);
    // Non-complete: some nonadjacent pair {u, v} is an independent set of
    // size 2, so the search below always produces a candidate.
    const Candidate best = IndependentSetSearch(g).run();
    if (!best.valid) throw std::logic_error("non-complete graph without an independent pair");
    return {best.value, best.set, best.isolated};
}

bool witness_valid(const Graph& g, const ToughnessReport& report) {
    if (g.is_complete())
        return report.witness == 0 && report.isolated_at_witness == 0 && report.value == Fraction(g.order() - 1);
    if ((report.witness & ~g.vertices()) != 0) return false;
    const int iso = isolated_count(g, report.witness);
    return iso >= 2 && iso == report.isolated_at_witness && report.value == Fraction(popcount(report.witness), iso);
}

std::string to_string(Bound bound) {
    switch (bound) {
        case Bound::MaLiu: return "3";
        case Bound::TheoremA: return "A";
        case Bound::TheoremB: return "B";
        case Bound::TheoremC: return "C";
        case Bound::LemmaD1: return "D1";
    }
    return "?";
}

Bound parse_bound(const std::string& name) {
    if (name == "3" || name == "ma-liu") return Bound::MaLiu;
    if (name == "A") return Bound::TheoremA;
    if (name == "B") return Bound::TheoremB;
    if (name == "C") return Bound::TheoremC;
    if (name == "D1") return Bound::LemmaD1;
    throw ThresholdError("unknown bound '" + name + "'");
}

Fraction threshold(Bound bound, const BoundParams& p) {
    const std::string tag = "threshold " + to_string(bound) + ": ";
    if (bound == Bound::TheoremB) {
        if (p.n < 1 || 2 * p.n > p.m) throw ThresholdError(tag + "requires 1 <= n <= m/2");
        return Fraction(1, p.m - p.n);
    }
    if (p.a < 1 || p.b <= p.a) throw ThresholdError(tag + "requires 1 <= a < b");
    const Fraction base(p.a - 1);
    switch (bound) {
        case Bound::MaLiu: return base + Fraction(p.a, p.b);
        case Bound::TheoremA:
            if (p.n < 1) throw ThresholdError(tag + "requires n >= 1");
            return base + Fraction(p.n) + Fraction(p.a - 1, p.b);
        case Bound::TheoremC:
            if (p.n < 1) throw ThresholdError(tag + "requires n >= 1");
            return base + Fraction(p.a + 2 * p.n - 1, p.b);
        case Bound::LemmaD1:
            if (p.n < 1) throw ThresholdError(tag + "requires n >= 1");
            if (p.k < 2 || p.k > p.b) throw ThresholdError(tag + "requires 2 <= k <= b");
            return base + Fraction(p.a + p.k * p.n - 1, p.b);
        case Bound::TheoremB: break;
    }
    throw ThresholdError(tag + "unhandled bound");
}

}  // namespace factorbench

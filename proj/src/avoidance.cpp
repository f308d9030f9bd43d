#include "factorbench/avoidance.hpp"

#include <algorithm>
#include <functional>

#include "factorbench/toughness.hpp"

namespace factorbench {

namespace {

/// k-subsets of {0..count-1} as index lists, lexicographic.
template <class Fn>
void for_each_combination(int count, int k, Fn&& fn) {
    if (k < 0 || k > count) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == count - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void require_deletion_cap(std::uint64_t count, const AvoidOptions& opt, const std::string& what) {
    if (count > opt.max_deletions)
        throw CapExceeded(what + ": " + std::to_string(count) + " deletions exceed cap " + std::to_string(opt.max_deletions));
}

void require_subset_cap(const Graph& g, const AvoidOptions& opt, const std::string& what) {
    if (g.order() > opt.caps.subset_vertices)
        throw CapExceeded(what + ": n=" + std::to_string(g.order()) + " exceeds subset cap " +
                          std::to_string(opt.caps.subset_vertices));
}

Premise min_degree_premise(const Graph& g, int bound) {
    const int d = g.min_degree();
    return {"min-degree", d >= bound, "delta(G)=" + std::to_string(d) + " >= " + std::to_string(bound)};
}

Premise toughness_premise(const Graph& g, const Fraction& bound, AvoidanceVerdict& v) {
    const ToughnessReport t = isolated_toughness(g);
    v.witnesses.push_back({"toughness", t.witness, t.value.str()});
    return {"isolated-toughness", t.value >= bound, "I(G)=" + t.value.str() + " >= " + bound.str()};
}

/// Host-label set S to the labels of the deleted graph (members of the
/// deletion itself are dropped).
VertexMask to_local(const Deleted& d, VertexMask host) {
    VertexMask out = 0;
    for (std::size_t i = 0; i < d.original.size(); ++i)
        if ((host >> d.original[i]) & 1U) out |= bit(static_cast<int>(i));
    return out;
}

FactorCertificate lift(const Deleted& d, FactorCertificate cert) {
    if (cert.violation) {
        cert.violation->s = d.lift(cert.violation->s);
        cert.violation->t = d.lift(cert.violation->t);
    }
    if (cert.factor)
        for (Edge& e : *cert.factor) e = d.lift(e);
    return cert;
}

/// Attaches a violation from the caller's candidate sets when the finder
/// returned a bare nonexistence verdict.
void attach_candidate(const Deleted& d, FactorCertificate& cert, int a, int b, const AvoidOptions& opt) {
    if (cert.exists || cert.violation) return;
    for (VertexMask host : opt.candidate_sets) {
        const VertexMask s = to_local(d, host);
        const std::int64_t delta = deficiency(d.graph, s, a, b);
        if (delta < 0) {
            cert.violation = Violation{s, low_set(d.graph, s, a), delta};
            return;
        }
    }
}

bool skip(const AvoidanceVerdict& v, const AvoidOptions& opt) { return opt.skip_conclusion_if_vacuous && !v.premises_hold(); }

std::vector<VertexMask> vertex_subsets(const Graph& g, int n, const AvoidOptions& opt, const std::string& what) {
    require_deletion_cap(binomial(g.order(), n), opt, what);
    std::vector<VertexMask> out;
    for (Combination c(g.order(), n); !c.done(); c.next()) out.push_back(c.mask());
    return out;
}

/// Direct route over vertex deletions. Returns per-deletion verdicts and
/// fills the first counterexample.
std::vector<char> direct_vertex_route(const Graph& g, const std::vector<VertexMask>& deletions, int a, int b,
                                      const AvoidOptions& opt, std::optional<Counterexample>& first) {
    std::vector<char> ok(deletions.size(), 1);
    for (std::size_t i = 0; i < deletions.size(); ++i) {
        const DeletionSpec spec = DeletionSpec::of_vertices(to_vector(deletions[i]));
        const Deleted d = remove(g, spec);
        FactorCertificate cert = find_ab_factor(d.graph, a, b, opt.caps);
        if (cert.exists) continue;
        ok[i] = 0;
        if (!first) {
            attach_candidate(d, cert, a, b, opt);
            first = Counterexample{spec, lift(d, std::move(cert)), std::nullopt};
        }
    }
    return ok;
}

}  // namespace

std::string to_string(TheoremTag tag) {
    switch (tag) {
        case TheoremTag::A: return "A";
        case TheoremTag::B: return "B";
        case TheoremTag::C: return "C";
        case TheoremTag::D: return "D";
        case TheoremTag::E: return "E";
        case TheoremTag::Lemma3: return "Lemma3";
        case TheoremTag::LemmaD1: return "LemmaD1";
        case TheoremTag::LemmaH: return "LemmaH";
    }
    return "?";
}

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Verified: return "verified";
        case Outcome::Vacuous: return "vacuous";
        case Outcome::Counterexample: return "counterexample";
    }
    return "?";
}

std::string to_string(Location loc) {
    switch (loc) {
        case Location::S: return "S";
        case Location::TPrime: return "T'";
        case Location::WPrime: return "W'";
    }
    return "?";
}

bool AvoidanceVerdict::premises_hold() const {
    return std::all_of(premises.begin(), premises.end(), [](const Premise& p) { return p.holds; });
}

bool AvoidanceVerdict::routes_agree() const {
    return std::all_of(routes.begin(), routes.end(), [&](const Route& r) { return r.holds == routes.front().holds; });
}

Outcome AvoidanceVerdict::outcome() const {
    if (!premises_hold()) return Outcome::Vacuous;
    return conclusion.value_or(true) ? Outcome::Verified : Outcome::Counterexample;
}

// ---------------------------------------------------------------------------

AvoidanceVerdict check_vertex_deletion_all(const Graph& g, int a, int b, int n, const AvoidOptions& opt) {
    AvoidanceVerdict v;
    v.theorem = TheoremTag::A;
    v.params = {{"a", a}, {"b", b}, {"n", n}};
    const Fraction bound = threshold(Bound::TheoremA, {.a = a, .b = b, .n = n});
    v.premises.push_back(min_degree_premise(g, a + n));
    v.premises.push_back(toughness_premise(g, bound, v));
    if (skip(v, opt)) return v;

    const std::vector<VertexMask> deletions =
        opt.deletions ? *opt.deletions : vertex_subsets(g, n, opt, "check_vertex_deletion_all");
    for (VertexMask del : deletions)
        if (popcount(del) != n || (del & ~g.vertices()) != 0)
            throw std::invalid_argument("check_vertex_deletion_all: deletion is not an n-subset of V");
    v.deletions_checked = deletions.size();

    std::optional<Counterexample> first;
    const std::vector<char> direct = direct_vertex_route(g, deletions, a, b, opt, first);
    const bool direct_holds = std::all_of(direct.begin(), direct.end(), [](char c) { return c != 0; });
    v.routes.push_back({"direct", direct_holds});

    const std::int64_t need = static_cast<std::int64_t>(b) * n;
    if (g.order() <= opt.caps.subset_vertices) {
        // bad[S]: δ_G(S) < bn; a deletion V' fails iff some S ⊇ V' is bad.
        const int order = g.order();
        std::vector<char> bad = tabulate_subsets<char>(opt.caps.exec, order, [&](VertexMask s) {
            return static_cast<char>(popcount(s) >= n && deficiency(g, s, a, b) < need);
        });
        std::vector<char> above = bad;
        for (int i = 0; i < order; ++i)
            for (VertexMask s = 0; s < above.size(); ++s)
                if (((s >> i) & 1U) == 0 && above[s | bit(i)]) above[s] = 1;
        bool criterion_holds = true;
        bool per_deletion_agree = true;
        for (std::size_t i = 0; i < deletions.size(); ++i) {
            const bool ok = above[deletions[i]] == 0;
            criterion_holds = criterion_holds && ok;
            per_deletion_agree = per_deletion_agree && (ok == (direct[i] != 0));
        }
        v.routes.push_back({"criterion", criterion_holds});
        if (!per_deletion_agree) v.routes.push_back({"per-deletion-agreement", !direct_holds});
        if (first) {
            const VertexMask del = to_mask(first->deletion.vertices);
            const auto s = first_subset_serial(order, [&](VertexMask x) { return (x & del) == del && bad[x]; });
            if (s) first->criterion = Violation{*s, low_set(g, *s, a), deficiency(g, *s, a, b)};
        }
    } else {
        if (!first)
            throw CapExceeded("check_vertex_deletion_all: criterion route needs n <= " +
                              std::to_string(opt.caps.subset_vertices) + " when no deletion fails");
        const VertexMask del = to_mask(first->deletion.vertices);
        for (VertexMask c : opt.candidate_sets) {
            const VertexMask s = c | del;
            const std::int64_t delta = deficiency(g, s, a, b);
            if (delta < need) {
                first->criterion = Violation{s, low_set(g, s, a), delta};
                break;
            }
        }
        if (!first->criterion)
            throw CapExceeded("check_vertex_deletion_all: no candidate set certifies the failing deletion above the subset cap");
        v.routes.push_back({"criterion", false});
    }
    if (first && first->criterion) v.witnesses.push_back({"criterion-S", first->criterion->s, std::to_string(first->criterion->delta)});
    v.conclusion = direct_holds;
    v.counterexample = std::move(first);
    return v;
}

// ---------------------------------------------------------------------------

AvoidanceVerdict check_edge_deletion_star(const Graph& g, int m, int n, const AvoidOptions& opt) {
    AvoidanceVerdict v;
    v.theorem = TheoremTag::B;
    v.params = {{"m", m}, {"n", n}};
    const bool range = n >= 1 && 2 * n <= m;
    v.premises.push_back({"parameter-range", range, "1 <= n <= m/2 with n=" + std::to_string(n) + ", m=" + std::to_string(m)});
    v.premises.push_back(min_degree_premise(g, 1 + n));
    if (range) {
        v.premises.push_back(toughness_premise(g, threshold(Bound::TheoremB, {.n = n, .m = m}), v));
    } else {
        v.premises.push_back({"isolated-toughness", false, "threshold 1/(m-n) undefined outside the parameter range"});
    }
    if (skip(v, opt)) return v;
    require_subset_cap(g, opt, "check_edge_deletion_star");

    const std::vector<Edge> edges = g.edges();
    require_deletion_cap(binomial(static_cast<int>(edges.size()), n), opt, "check_edge_deletion_star");
    bool criterion_holds = true;
    bool direct_holds = true;
    bool agree = true;
    for_each_combination(static_cast<int>(edges.size()), n, [&](const std::vector<int>& idx) {
        std::vector<Edge> chosen;
        for (int i : idx) chosen.push_back(edges[static_cast<std::size_t>(i)]);
        const Graph h = remove_edges(g, chosen);
        const FactorCertificate crit = check_star_factor(h, m, opt.caps);
        const auto forest = find_star_factor(h, m, opt.caps);
        ++v.deletions_checked;
        criterion_holds = criterion_holds && crit.exists;
        direct_holds = direct_holds && forest.has_value();
        agree = agree && (crit.exists == forest.has_value());
        if (!crit.exists && !v.counterexample) v.counterexample = Counterexample{DeletionSpec::of_edges(chosen), crit, crit.violation};
    });
    v.routes.push_back({"criterion", criterion_holds});
    v.routes.push_back({"direct", direct_holds});
    if (!agree) v.routes.push_back({"per-deletion-agreement", !criterion_holds});
    v.conclusion = criterion_holds;
    return v;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Edge>> enumerate_matchings(const Graph& g, int n, std::size_t limit) {
    const std::vector<Edge> edges = g.edges();
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> current;
    std::function<void(std::size_t, VertexMask)> extend = [&](std::size_t from, VertexMask used) {
        if (static_cast<int>(current.size()) == n) {
            if (out.size() == limit) throw CapExceeded("enumerate_matchings: more than " + std::to_string(limit) + " matchings");
            out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < edges.size(); ++i) {
            const VertexMask ends = bit(edges[i].u) | bit(edges[i].v);
            if ((used & ends) != 0) continue;
            current.push_back(edges[i]);
            extend(i + 1, used | ends);
            current.pop_back();
        }
    };
    if (n >= 0) extend(0, 0);
    return out;
}

AvoidanceVerdict check_matching_deletion(const Graph& g, int a, int b, int n, const AvoidOptions& opt) {
    AvoidanceVerdict v;
    v.theorem = TheoremTag::C;
    v.params = {{"a", a}, {"b", b}, {"n", n}};
    v.premises.push_back(min_degree_premise(g, a + n));
    v.premises.push_back(toughness_premise(g, threshold(Bound::TheoremC, {.a = a, .b = b, .n = n}), v));
    if (skip(v, opt)) return v;

    const auto matchings = enumerate_matchings(g, n, opt.max_deletions);
    bool holds = true;
    for (const auto& m : matchings) {
        const Graph h = remove_edges(g, m);
        FactorCertificate cert = find_ab_factor(h, a, b, opt.caps);
        ++v.deletions_checked;
        if (cert.exists) continue;
        holds = false;
        if (!v.counterexample) v.counterexample = Counterexample{DeletionSpec::of_matching(m), std::move(cert), std::nullopt};
    }
    v.routes.push_back({"direct", holds});
    v.conclusion = holds;
    return v;
}

// ---------------------------------------------------------------------------

RhoValue rho(const Graph& g, const Edge& e, VertexMask s, int a) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e))
        throw GraphError("rho: " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");
    const VertexMask rest = g.vertices() & ~s;
    auto locate = [&](int x, int other) {
        if ((s >> x) & 1U) return Location::S;
        int d = popcount(g.neighbors(x) & rest);
        if ((rest >> other) & 1U) --d;  // the edge itself is gone in G - e
        return d <= a - 1 ? Location::TPrime : Location::WPrime;
    };
    RhoValue r;
    r.u_location = locate(e.u, e.v);
    r.v_location = locate(e.v, e.u);
    const int in_t = (r.u_location == Location::TPrime) + (r.v_location == Location::TPrime);
    const int in_w = (r.u_location == Location::WPrime) + (r.v_location == Location::WPrime);
    if (in_t == 2) {
        r.value = 2;
        r.branch = RhoValue::Case::BothInT;
    } else if (in_t == 1 && in_w == 1) {
        r.value = 1;
        r.branch = RhoValue::Case::OneInTOtherInW;
    }
    return r;
}

namespace {

/// First S (size-lex) with δ_G(S) < ρ(S), or nullopt.
std::optional<VertexMask> rho_violation(const Graph& g, const Edge& e, int a, int b, const AvoidOptions& opt) {
    return first_subset(opt.caps.exec, g.order(), [&](VertexMask s) { return deficiency(g, s, a, b) < rho(g, e, s, a).value; });
}

}  // namespace

AvoidanceVerdict check_edge_avoiding(const Graph& g, const Edge& e, int a, int b, const AvoidOptions& opt) {
    if (a >= b) throw UnsupportedError("check_edge_avoiding: the criterion needs a < b");
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e))
        throw GraphError("check_edge_avoiding: " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");
    require_subset_cap(g, opt, "check_edge_avoiding");
    AvoidanceVerdict v;
    v.theorem = TheoremTag::LemmaH;
    v.params = {{"a", a}, {"b", b}, {"u", e.u}, {"v", e.v}};

    const auto crit = rho_violation(g, e, a, b, opt);
    const Graph h = remove_edges(g, std::vector<Edge>{e});
    FactorCertificate cert = find_ab_factor(h, a, b, opt.caps);
    v.routes.push_back({"criterion", !crit.has_value()});
    v.routes.push_back({"direct", cert.exists});
    v.deletions_checked = 1;
    v.conclusion = cert.exists;
    if (crit) v.witnesses.push_back({"rho", *crit, std::to_string(rho(g, e, *crit, a).value)});
    if (!cert.exists) {
        Counterexample cx{DeletionSpec::of_edge(e), std::move(cert), std::nullopt};
        if (crit) cx.criterion = Violation{*crit, low_set(g, *crit, a), deficiency(g, *crit, a, b)};
        v.counterexample = std::move(cx);
    }
    return v;
}

AvoidanceVerdict check_theorem_E(const Graph& g, int a, int b, const AvoidOptions& opt) {
    AvoidanceVerdict v;
    v.theorem = TheoremTag::E;
    v.params = {{"a", a}, {"b", b}};
    v.premises.push_back(min_degree_premise(g, a + 2));
    if (skip(v, opt)) return v;

    const auto pairs = vertex_subsets(g, 2, opt, "check_theorem_E");
    std::optional<Counterexample> pair_failure;
    const std::vector<char> pair_ok = direct_vertex_route(g, pairs, a, b, opt, pair_failure);
    const bool all_pairs = std::all_of(pair_ok.begin(), pair_ok.end(), [](char c) { return c != 0; });
    v.premises.push_back({"pair-deletions", all_pairs,
                          all_pairs ? "every G-{x,y} has an [a,b]-factor"
                                    : "G-{" + std::to_string(pair_failure->deletion.vertices[0]) + "," +
                                          std::to_string(pair_failure->deletion.vertices[1]) + "} has none"});
    if (skip(v, opt)) return v;

    const std::vector<Edge> edges = g.edges();
    require_deletion_cap(edges.size(), opt, "check_theorem_E");
    const bool with_criterion = a < b && g.order() <= opt.caps.subset_vertices;
    bool direct_holds = true;
    bool criterion_holds = true;
    bool agree = true;
    for (const Edge& e : edges) {
        FactorCertificate cert = find_ab_factor(remove_edges(g, std::vector<Edge>{e}), a, b, opt.caps);
        ++v.deletions_checked;
        direct_holds = direct_holds && cert.exists;
        if (with_criterion) {
            const bool ok = !rho_violation(g, e, a, b, opt).has_value();
            criterion_holds = criterion_holds && ok;
            agree = agree && ok == cert.exists;
        }
        if (!cert.exists && !v.counterexample) v.counterexample = Counterexample{DeletionSpec::of_edge(e), std::move(cert), std::nullopt};
    }
    v.routes.push_back({"direct", direct_holds});
    if (with_criterion) v.routes.push_back({"criterion", criterion_holds});
    if (!agree) v.routes.push_back({"per-deletion-agreement", !direct_holds});
    v.conclusion = direct_holds;
    return v;
}

AvoidanceVerdict check_theorem_D(const Graph& g, int a, int b, int n, const AvoidOptions& opt) {
    if (n < 1) throw std::invalid_argument("check_theorem_D: n must be at least 1");
    AvoidanceVerdict v;
    v.theorem = TheoremTag::D;
    v.params = {{"a", a}, {"b", b}, {"n", n}};
    v.premises.push_back(min_degree_premise(g, a + n));
    if (skip(v, opt)) return v;

    std::optional<Counterexample> antecedent_failure;
    const auto larger = vertex_subsets(g, n, opt, "check_theorem_D");
    const auto ok = direct_vertex_route(g, larger, a, b, opt, antecedent_failure);
    const bool antecedent = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    v.premises.push_back({"n-deletions", antecedent,
                          antecedent ? "every n-subset deletion has an [a,b]-factor" : "some n-subset deletion has none"});
    if (!antecedent) v.witnesses.push_back({"antecedent-failure", to_mask(antecedent_failure->deletion.vertices), ""});
    if (skip(v, opt)) return v;

    std::optional<Counterexample> first;
    const auto smaller = vertex_subsets(g, n - 1, opt, "check_theorem_D");
    const auto ok_smaller = direct_vertex_route(g, smaller, a, b, opt, first);
    v.deletions_checked = larger.size() + smaller.size();
    const bool consequent = std::all_of(ok_smaller.begin(), ok_smaller.end(), [](char c) { return c != 0; });
    v.routes.push_back({"direct", consequent});
    v.conclusion = consequent;
    v.counterexample = std::move(first);
    return v;
}

AvoidanceVerdict check_lemma_D1(const Graph& g, int a, int b, int n, int k, const AvoidOptions& opt) {
    const Fraction bound = threshold(Bound::LemmaD1, {.a = a, .b = b, .n = n, .k = k});
    AvoidanceVerdict v;
    v.theorem = TheoremTag::LemmaD1;
    v.params = {{"a", a}, {"b", b}, {"n", n}, {"k", k}};
    v.premises.push_back(min_degree_premise(g, a + n));
    v.premises.push_back(toughness_premise(g, bound, v));
    if (skip(v, opt)) return v;
    require_subset_cap(g, opt, "check_lemma_D1");

    const std::int64_t need = static_cast<std::int64_t>(k) * n;
    const auto hit = first_subset(opt.caps.exec, g.order(), [&](VertexMask s) {
        return low_set(g, s, a) != 0 && deficiency(g, s, a, b) < need;
    });
    v.deletions_checked = std::size_t{1} << g.order();
    v.routes.push_back({"criterion", !hit.has_value()});
    v.conclusion = !hit.has_value();
    if (hit) {
        Counterexample cx;
        cx.criterion = Violation{*hit, low_set(g, *hit, a), deficiency(g, *hit, a, b)};
        cx.certificate.violation = cx.criterion;
        v.counterexample = std::move(cx);
    }
    return v;
}

// ---------------------------------------------------------------------------

SharpnessReport check_sharpness(int m, int a, int b, int n, const AvoidOptions& opt) {
    SharpnessReport r;
    r.extremal = build_extremal(m, a, b, n);
    r.deleted = r.extremal.deletion_set();
    r.ratio = r.extremal.witness_ratio();
    r.threshold = threshold(Bound::TheoremA, {.a = a, .b = b, .n = n});

    const Deleted d = remove(r.extremal.graph, DeletionSpec::of_vertices(to_vector(r.deleted)));
    const VertexMask s = to_local(d, r.extremal.clique_small);
    const VertexMask t = low_set(d.graph, s, a);
    std::int64_t degree_sum = 0;
    for (int x : to_vector(t)) degree_sum += d.graph.degree_avoiding(x, s);
    r.demand = static_cast<std::int64_t>(a) * popcount(t) - degree_sum;
    r.supply = static_cast<std::int64_t>(b) * popcount(s);

    AvoidOptions local = opt;
    local.deletions = std::vector<VertexMask>{r.deleted};
    local.candidate_sets = {r.extremal.clique_small};
    r.verdict = check_vertex_deletion_all(r.extremal.graph, a, b, n, local);
    r.verdict.witnesses.push_back({"witness-ratio", r.extremal.clique_small | r.extremal.clique_large, r.ratio.str()});
    return r;
}

// ---------------------------------------------------------------------------

TheoremTag parse_theorem(const std::string& name) {
    for (TheoremTag tag : {TheoremTag::A, TheoremTag::B, TheoremTag::C, TheoremTag::D, TheoremTag::E, TheoremTag::Lemma3,
                           TheoremTag::LemmaD1, TheoremTag::LemmaH})
        if (to_string(tag) == name) return tag;
    if (name == "D1") return TheoremTag::LemmaD1;
    if (name == "H") return TheoremTag::LemmaH;
    throw std::invalid_argument("unknown theorem '" + name + "'");
}

AvoidanceVerdict check_theorem(TheoremTag tag, const Graph& g, const Params& params, const AvoidOptions& opt) {
    auto get = [&](const char* key) {
        for (const auto& [k, v] : params)
            if (k == key) return static_cast<int>(v);
        throw std::invalid_argument(to_string(tag) + ": missing parameter '" + key + "'");
    };
    switch (tag) {
        case TheoremTag::A:
        case TheoremTag::Lemma3: return check_vertex_deletion_all(g, get("a"), get("b"), get("n"), opt);
        case TheoremTag::B: return check_edge_deletion_star(g, get("m"), get("n"), opt);
        case TheoremTag::C: return check_matching_deletion(g, get("a"), get("b"), get("n"), opt);
        case TheoremTag::D: return check_theorem_D(g, get("a"), get("b"), get("n"), opt);
        case TheoremTag::E: return check_theorem_E(g, get("a"), get("b"), opt);
        case TheoremTag::LemmaD1: return check_lemma_D1(g, get("a"), get("b"), get("n"), get("k"), opt);
        case TheoremTag::LemmaH: return check_edge_avoiding(g, {get("u"), get("v")}, get("a"), get("b"), opt);
    }
    throw std::invalid_argument("unknown theorem");
}

}  // namespace factorbench

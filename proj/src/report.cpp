#include "factorbench/report.hpp"

#include "factorbench/graph_io.hpp"

namespace factorbench {

namespace {

VertexMask mask_of(const Json& j) {
    VertexMask m = 0;
    for (const auto& x : j) {
        const int v = x.get<int>();
        if (v < 0 || v >= 64) throw std::invalid_argument("vertex out of range in set");
        m |= bit(v);
    }
    return m;
}

std::vector<Edge> edges_of(const Json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) {
        const int u = e.at(0).get<int>();
        const int v = e.at(1).get<int>();
        out.push_back({std::min(u, v), std::max(u, v)});
    }
    return out;
}

VertexMask to_local(const Deleted& d, VertexMask host) {
    VertexMask out = 0;
    for (std::size_t i = 0; i < d.original.size(); ++i)
        if ((host >> d.original[i]) & 1U) out |= bit(static_cast<int>(i));
    return out;
}

int param(const Json& params, const char* key) {
    if (!params.contains(key)) throw std::invalid_argument(std::string("missing parameter '") + key + "'");
    return params.at(key).get<int>();
}

}  // namespace

Json set_json(VertexMask s) {
    Json out = Json::array();
    for (int v : to_vector(s)) out.push_back(v);
    return out;
}

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

Json certificate_json(const FactorCertificate& cert) {
    Json j;
    j["verdict"] = cert.exists ? "exists" : "not-exists";
    if (cert.factor) j["factorEdges"] = edges_json(*cert.factor);
    if (cert.violation) {
        j["S"] = set_json(cert.violation->s);
        j["T"] = set_json(cert.violation->t);
        j["delta"] = cert.violation->delta;
    }
    return j;
}

Json star_certificate_json(const FactorCertificate& cert, const std::optional<StarForest>& forest) {
    Json j = certificate_json(cert);
    if (forest) {
        Json stars = Json::array();
        for (const Star& s : *forest) stars.push_back({{"center", s.center}, {"leaves", s.leaves}});
        j["stars"] = std::move(stars);
    }
    return j;
}

Json toughness_json(const ToughnessReport& report) {
    return {{"value", report.value.str()}, {"witness", set_json(report.witness)}, {"isolated", report.isolated_at_witness}};
}

Json deletion_json(const DeletionSpec& spec) {
    Json j;
    j["kind"] = to_string(spec.kind);
    if (spec.kind == DeletionSpec::Kind::Vertices)
        j["vertices"] = spec.vertices;
    else
        j["edges"] = edges_json(spec.edges);
    return j;
}

DeletionSpec parse_deletion(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == to_string(DeletionSpec::Kind::Vertices)) return DeletionSpec::of_vertices(j.at("vertices").get<std::vector<int>>());
    const std::vector<Edge> edges = edges_of(j.at("edges"));
    if (kind == to_string(DeletionSpec::Kind::Edges)) return DeletionSpec::of_edges(edges);
    if (kind == to_string(DeletionSpec::Kind::Matching)) return DeletionSpec::of_matching(edges);
    if (kind == to_string(DeletionSpec::Kind::SingleEdge) && edges.size() == 1) return DeletionSpec::of_edge(edges.front());
    throw std::invalid_argument("unknown deletion kind '" + kind + "'");
}

Json verdict_json(const AvoidanceVerdict& v, const Graph& g) {
    Json j;
    j["theorem"] = to_string(v.theorem);
    Json params = Json::object();
    for (const auto& [k, x] : v.params) params[k] = x;
    j["params"] = std::move(params);
    Json premises = Json::object();
    for (const Premise& p : v.premises) premises[p.name] = {{"holds", p.holds}, {"detail", p.detail}};
    j["premises"] = std::move(premises);
    j["premisesHold"] = v.premises_hold();
    j["conclusion"] = v.conclusion ? Json(*v.conclusion) : Json(nullptr);
    j["outcome"] = to_string(v.outcome());
    Json routes = Json::object();
    for (const Route& r : v.routes) routes[r.name] = r.holds;
    j["routes"] = std::move(routes);
    if (v.counterexample) {
        Json cx;
        cx["deletion"] = deletion_json(v.counterexample->deletion);
        cx["certificate"] = certificate_json(v.counterexample->certificate);
        if (v.counterexample->criterion) {
            const Violation& c = *v.counterexample->criterion;
            cx["criterion"] = {{"S", set_json(c.s)}, {"T", set_json(c.t)}, {"delta", c.delta}};
        }
        j["counterexample"] = std::move(cx);
    }
    Json witnesses = Json::array();
    for (const Witness& w : v.witnesses) witnesses.push_back({{"label", w.label}, {"set", set_json(w.set)}, {"value", w.value}});
    j["witnesses"] = std::move(witnesses);
    j["deletionsChecked"] = v.deletions_checked;
    j["graph6"] = emit_graph6(g);
    return j;
}

std::string reverify_certificate(const Graph& g, int a, int b, const Json& cert) {
    const std::string verdict = cert.at("verdict").get<std::string>();
    if (verdict == "exists") {
        if (!cert.contains("factorEdges")) return find_ab_factor(g, a, b).exists ? "" : "no factor exists";
        return is_factor(g, edges_of(cert.at("factorEdges")), a, b) ? "" : "factor edges do not form an [a,b]-factor";
    }
    if (verdict != "not-exists") return "unknown verdict '" + verdict + "'";
    if (cert.contains("S")) {
        const VertexMask s = mask_of(cert.at("S"));
        if ((s & ~g.vertices()) != 0) return "S is not a vertex set of the graph";
        const std::int64_t delta = deficiency(g, s, a, b);
        if (delta != cert.at("delta").get<std::int64_t>()) return "recorded delta differs from " + std::to_string(delta);
        if (low_set(g, s, a) != mask_of(cert.at("T"))) return "recorded T differs";
        if (delta >= 0) return "S does not violate the criterion";
        return "";
    }
    return find_ab_factor(g, a, b).exists ? "a factor exists" : "";
}

std::string reverify_verdict(const Json& verdict, const AvoidOptions& opt) {
    const Graph g = parse_graph6(verdict.at("graph6").get<std::string>());
    const TheoremTag tag = parse_theorem(verdict.at("theorem").get<std::string>());
    const Json& params = verdict.at("params");
    const Json& conclusion = verdict.at("conclusion");

    if (!verdict.contains("counterexample")) {
        if (conclusion.is_boolean() && !conclusion.get<bool>()) return "conclusion false without a counterexample";
        Params p;
        for (const auto& [k, x] : params.items()) p.emplace_back(k, x.get<std::int64_t>());
        const AvoidanceVerdict again = check_theorem(tag, g, p, opt);
        if (to_string(again.outcome()) != verdict.at("outcome").get<std::string>())
            return "rerun outcome " + to_string(again.outcome()) + " differs";
        if (conclusion.is_boolean() && again.conclusion != conclusion.get<bool>()) return "rerun conclusion differs";
        return "";
    }

    if (conclusion != Json(false)) return "counterexample recorded with a conclusion that is not false";
    const Json& cx = verdict.at("counterexample");
    const DeletionSpec spec = parse_deletion(cx.at("deletion"));
    const Deleted d = remove(g, spec);
    const Json& cert = cx.at("certificate");

    if (tag == TheoremTag::B) {
        const FactorCertificate again = check_star_factor(d.graph, param(params, "m"), opt.caps);
        if (again.exists) return "G - E' has a star factor";
        return certificate_json(again) == cert ? "" : "star certificate differs from a rerun";
    }
    if (tag == TheoremTag::LemmaD1) {
        const Json& c = cx.at("criterion");
        const VertexMask s = mask_of(c.at("S"));
        const int a = param(params, "a");
        const std::int64_t delta = deficiency(g, s, a, param(params, "b"));
        if (low_set(g, s, a) == 0) return "low set is empty";
        if (delta != c.at("delta").get<std::int64_t>()) return "recorded delta differs";
        return delta < static_cast<std::int64_t>(param(params, "k")) * param(params, "n") ? "" : "S satisfies the bound";
    }

    const int a = param(params, "a");
    const int b = param(params, "b");
    if (cert.at("verdict") != "not-exists") return "counterexample certificate claims existence";
    if (find_ab_factor(d.graph, a, b, opt.caps).exists) return "the deleted graph has an [a,b]-factor";
    if (cert.contains("S")) {
        Json local = cert;
        const VertexMask s = mask_of(cert.at("S"));
        if ((s & ~d.lift(d.graph.vertices())) != 0) return "S meets the deletion";
        local["S"] = set_json(to_local(d, s));
        local["T"] = set_json(to_local(d, mask_of(cert.at("T"))));
        if (std::string why = reverify_certificate(d.graph, a, b, local); !why.empty()) return why;
    }
    if (cx.contains("criterion")) {
        const Json& c = cx.at("criterion");
        const VertexMask s = mask_of(c.at("S"));
        const std::int64_t delta = deficiency(g, s, a, b);
        if (delta != c.at("delta").get<std::int64_t>()) return "recorded criterion delta differs";
        if (tag == TheoremTag::A || tag == TheoremTag::Lemma3) {
            const VertexMask del = to_mask(spec.vertices);
            if ((s & del) != del) return "criterion S does not contain the deletion";
            if (delta >= static_cast<std::int64_t>(b) * param(params, "n")) return "criterion S satisfies delta >= bn";
        }
        if (tag == TheoremTag::LemmaH && delta >= rho(g, spec.edges.front(), s, a).value) return "criterion S satisfies delta >= rho";
    }
    return "";
}

}  // namespace factorbench

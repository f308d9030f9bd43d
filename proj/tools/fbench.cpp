// fbench: command-line front end.
//
// Exit codes: 0 exists / verified, 1 not exists / counterexample,
// 2 input or usage error, 3 a cap or budget was exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "factorbench/avoidance.hpp"
#include "factorbench/campaign.hpp"
#include "factorbench/factor.hpp"
#include "factorbench/graph_io.hpp"
#include "factorbench/report.hpp"
#include "factorbench/toughness.hpp"

using namespace factorbench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitCap = 3;

struct Globals {
    std::uint64_t seed = 1;
    bool seed_given = false;
    int cap_n = 12;
    std::size_t cap_deletions = 500;
    bool parallel = false;
    std::string input;
};

template <class T>
void env_default(const char* name, T& out) {
    if (const char* v = std::getenv(name)) {
        std::istringstream in(v);
        T value{};
        if (in >> value) out = value;
    }
}

/// graph6 lines from a file or stdin, with 1-based line numbers. Blank lines
/// are skipped.
template <class Fn>
int for_each_line(const Globals& g, Fn&& fn) {
    std::ifstream file;
    if (!g.input.empty() && g.input != "-") {
        file.open(g.input);
        if (!file) {
            std::cerr << "cannot open " << g.input << '\n';
            return kExitError;
        }
    }
    std::istream& in = file.is_open() ? file : std::cin;
    int worst = kExitOk;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        int code = kExitOk;
        try {
            code = fn(parse_graph6(line));
        } catch (const Graph6Error& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            code = kExitError;
        } catch (const CapExceeded& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            code = kExitCap;
        } catch (const BudgetExceeded& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            code = kExitCap;
        } catch (const std::exception& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            code = kExitError;
        }
        worst = std::max(worst, code);
    }
    return worst;
}

AvoidOptions options(const Globals& g) {
    AvoidOptions opt;
    opt.caps.subset_vertices = g.cap_n;
    opt.caps.exec = g.parallel ? Execution::Parallel : Execution::Serial;
    opt.max_deletions = g.cap_deletions;
    return opt;
}

Edge parse_edge(const std::string& text) {
    const auto dash = text.find_first_of("-,");
    if (dash == std::string::npos) throw CLI::ValidationError("--edge", "expected u-v");
    const int u = std::stoi(text.substr(0, dash));
    const int v = std::stoi(text.substr(dash + 1));
    return {std::min(u, v), std::max(u, v)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    Globals g;
    env_default("FACTORBENCH_CAP_N", g.cap_n);
    env_default("FACTORBENCH_CAP_DELETIONS", g.cap_deletions);

    CLI::App app{"Exact graph-factor workbench"};
    app.set_version_flag("--version", FACTORBENCH_VERSION);
    app.require_subcommand(1);
    app.add_option("--seed", g.seed, "Seed for randomized commands")->each([&](const std::string&) { g.seed_given = true; });
    app.add_option("--cap-n", g.cap_n, "Vertex limit for exhaustive subset scans (env FACTORBENCH_CAP_N)")->check(CLI::Range(1, 30));
    app.add_option("--cap-deletions", g.cap_deletions, "Deletions per instance (env FACTORBENCH_CAP_DELETIONS)");
    app.add_flag("--parallel", g.parallel, "Use the OpenMP kernels");

    auto* tough = app.add_subcommand("toughness", "Isolated toughness of each graph6 line");
    tough->add_option("input", g.input, "graph6 file (default stdin)");
    bool tough_json = false;
    tough->add_flag("--json", tough_json, "One JSON object per line");

    auto* factor = app.add_subcommand("factor", "[a,b]-factor existence");
    factor->add_option("input", g.input, "graph6 file (default stdin)");
    int fa = 1, fb = 2;
    bool find = false;
    factor->add_option("-a", fa)->required();
    factor->add_option("-b", fb)->required();
    factor->add_flag("--find", find, "Report explicit factor edges");

    auto* avoid = app.add_subcommand("avoid", "Factor checks that avoid deleted vertices or edges");
    avoid->add_option("input", g.input, "graph6 file (default stdin)");
    std::string mode;
    int aa = 1, ab = 2, am = 2, an = 1;
    std::string edge_text;
    avoid->add_option("--mode", mode)->required()->check(CLI::IsMember({"vertices", "edges", "matching", "edge"}));
    avoid->add_option("-a", aa);
    avoid->add_option("-b", ab);
    avoid->add_option("-m", am, "Star size for edges mode");
    avoid->add_option("-n", an, "Number of deleted vertices, edges or matching edges");
    avoid->add_option("--edge", edge_text, "Edge u-v for edge mode");

    auto* extremal = app.add_subcommand("extremal", "The sharpness construction H(m,a,b,n)");
    int xm = 1, xa = 2, xb = 3, xn = 1;
    extremal->add_option("-m", xm)->required();
    extremal->add_option("-a", xa)->required();
    extremal->add_option("-b", xb)->required();
    extremal->add_option("-n", xn)->required();

    auto* campaign = app.add_subcommand("campaign", "Randomized theorem campaign from a key=value config");
    std::string config_path, json_out, csv_out;
    campaign->add_option("config", config_path)->required();
    campaign->add_option("--json", json_out, "Report path (overrides the config)");
    campaign->add_option("--csv", csv_out, "Summary path (overrides the config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        const AvoidOptions opt = options(g);

        if (*tough) {
            return for_each_line(g, [&](const Graph& graph) {
                const ToughnessReport r = isolated_toughness(graph);
                if (tough_json) {
                    std::cout << toughness_json(r).dump() << '\n';
                } else {
                    std::cout << r.value.str() << " {";
                    const auto members = to_vector(r.witness);
                    for (std::size_t i = 0; i < members.size(); ++i) std::cout << (i ? "," : "") << members[i];
                    std::cout << "}\n";
                }
                return kExitOk;
            });
        }

        if (*factor) {
            if (fa < 0 || fa > fb) throw CLI::ValidationError("-a/-b", "need 0 <= a <= b");
            return for_each_line(g, [&](const Graph& graph) {
                FactorCertificate cert;
                if (find || fa == fb) {
                    cert = find_ab_factor(graph, fa, fb, opt.caps);
                    if (!find) cert.factor.reset();
                } else {
                    cert = check_ab_factor(graph, fa, fb, opt.caps);
                }
                std::cout << certificate_json(cert).dump() << '\n';
                return cert.exists ? kExitOk : kExitNegative;
            });
        }

        if (*avoid) {
            return for_each_line(g, [&](const Graph& graph) {
                AvoidanceVerdict v;
                if (mode == "vertices") v = check_vertex_deletion_all(graph, aa, ab, an, opt);
                if (mode == "edges") v = check_edge_deletion_star(graph, am, an, opt);
                if (mode == "matching") v = check_matching_deletion(graph, aa, ab, an, opt);
                if (mode == "edge") {
                    if (edge_text.empty()) throw std::invalid_argument("edge mode needs --edge u-v");
                    v = check_edge_avoiding(graph, parse_edge(edge_text), aa, ab, opt);
                }
                std::cout << verdict_json(v, graph).dump(2) << '\n';
                return v.outcome() == Outcome::Counterexample ? kExitNegative : kExitOk;
            });
        }

        if (*extremal) {
            const SharpnessReport r = check_sharpness(xm, xa, xb, xn, opt);
            Json j;
            j["params"] = {{"m", xm}, {"a", xa}, {"b", xb}, {"n", xn}};
            j["graph6"] = emit_graph6(r.extremal.graph);
            j["order"] = r.extremal.graph.order();
            j["ratio"] = r.ratio.str();
            j["threshold"] = r.threshold.str();
            j["ratioBelowThreshold"] = r.ratio < r.threshold;
            j["V0"] = set_json(r.deleted);
            j["smallClique"] = set_json(r.extremal.clique_small);
            j["demand"] = r.demand;
            j["supply"] = r.supply;
            if (r.verdict.counterexample) j["certificate"] = certificate_json(r.verdict.counterexample->certificate);
            j["verdict"] = verdict_json(r.verdict, r.extremal.graph);
            std::cout << j.dump(2) << '\n';
            return kExitOk;
        }

        if (*campaign) {
            CampaignConfig config = parse_config(read_file(config_path));
            if (g.seed_given) config.seed = g.seed;
            if (!json_out.empty()) config.json_path = json_out;
            if (!csv_out.empty()) config.csv_path = csv_out;
            const CampaignReport report = run_campaign(config, g.parallel ? Execution::Parallel : Execution::Serial);
            if (!config.json_path.empty()) write_file(config.json_path, report.json.dump(2) + "\n");
            if (!config.csv_path.empty()) write_file(config.csv_path, csv_summary(report));
            if (config.csv_path.empty()) std::cout << csv_summary(report);
            std::cout << report.json["counts"].dump() << '\n';
            return report.failed() ? kExitNegative : kExitOk;
        }
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << '\n';
        return kExitCap;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << '\n';
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

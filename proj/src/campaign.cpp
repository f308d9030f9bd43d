#include "factorbench/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <ctime>
#include <random>
#include <set>
#include <sstream>

#include "factorbench/graph_io.hpp"

namespace factorbench {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string part; std::getline(in, part, sep);) out.push_back(trim(part));
    return out;
}

template <class Int>
Int parse_int(const std::string& field, const std::string& text) {
    Int value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) throw ConfigError(field, "'" + text + "' is not an integer");
    return value;
}

std::vector<int> parse_int_list(const std::string& field, const std::string& text) {
    std::vector<int> out;
    for (const std::string& part : split(text, ',')) out.push_back(parse_int<int>(field, part));
    if (out.empty()) throw ConfigError(field, "empty list");
    return out;
}

template <class T, class Fn>
std::string join(const std::vector<T>& items, Fn&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + fmt(items[i]);
    return out;
}

std::string params_text(const Params& p) {
    std::string out;
    for (const auto& [k, v] : p) out += (out.empty() ? "" : ";") + k + "=" + std::to_string(v);
    return out;
}

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Cell {
    TheoremTag theorem;
    Params params;
    std::string skip;  // non-empty: the cell cannot have premise-satisfying instances
};

std::vector<Cell> cells_of(const CampaignConfig& c) {
    std::vector<Cell> out;
    for (TheoremTag t : c.theorems) {
        switch (t) {
            case TheoremTag::B:
                for (int m : c.m_values)
                    for (int n : c.n_values) {
                        Cell cell{t, {{"m", m}, {"n", n}}, {}};
                        if (n < 1 || 2 * n > m) cell.skip = "parameter range 1 <= n <= m/2 fails";
                        out.push_back(std::move(cell));
                    }
                break;
            case TheoremTag::E:
                for (auto [a, b] : c.ab) out.push_back({t, {{"a", a}, {"b", b}}, {}});
                break;
            case TheoremTag::LemmaD1:
                for (auto [a, b] : c.ab)
                    for (int n : c.n_values) {
                        std::set<int> ks;
                        for (const std::string& k : c.k_values) ks.insert(k == "b" ? b : std::stoi(k));
                        for (int k : ks) {
                            Cell cell{t, {{"a", a}, {"b", b}, {"n", n}, {"k", k}}, {}};
                            if (k < 2 || k > b) cell.skip = "k outside [2, b]";
                            out.push_back(std::move(cell));
                        }
                    }
                break;
            default:
                for (auto [a, b] : c.ab)
                    for (int n : c.n_values) out.push_back({t, {{"a", a}, {"b", b}, {"n", n}}, {}});
        }
    }
    return out;
}

struct Sample {
    std::uint64_t seed = 0;
    Graph graph;
    std::optional<AvoidanceVerdict> verdict;
    std::string capped;
    std::string error;
};

Sample draw(const CampaignConfig& c, std::size_t cell, int attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                      static_cast<std::uint32_t>(cell), static_cast<std::uint32_t>(attempt)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    std::mt19937_64 rng((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
    const int span = c.max_vertices - c.min_vertices + 1;
    const int order = c.min_vertices + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
    const Fraction& p = c.densities[rng() % c.densities.size()];
    Sample s;
    s.seed = rng();
    s.graph = generate_random(order, p, s.seed);
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

void validate(const CampaignConfig& c) {
    if (c.theorems.empty()) throw ConfigError("theorems", "empty list");
    if (c.min_vertices < 1 || c.min_vertices > c.max_vertices) throw ConfigError("vertices", "need 1 <= min <= max");
    if (c.max_vertices > c.cap_subset)
        throw ConfigError("vertices", "max " + std::to_string(c.max_vertices) + " exceeds cap_subset " + std::to_string(c.cap_subset));
    if (c.cap_subset < 1 || c.cap_subset > 20) throw ConfigError("cap_subset", "must lie in [1, 20]");
    if (c.densities.empty()) throw ConfigError("p", "empty list");
    for (const Fraction& p : c.densities)
        if (p < Fraction(0) || p > Fraction(1)) throw ConfigError("p", p.str() + " is not a probability");
    if (c.ab.empty()) throw ConfigError("ab", "empty list");
    for (auto [a, b] : c.ab)
        if (a < 1 || a >= b) throw ConfigError("ab", std::to_string(a) + ":" + std::to_string(b) + " needs 1 <= a < b");
    for (int n : c.n_values)
        if (n < 1) throw ConfigError("n", "values must be >= 1");
    for (int m : c.m_values)
        if (m < 1) throw ConfigError("m", "values must be >= 1");
    for (const std::string& k : c.k_values)
        if (k != "b") (void)parse_int<int>("k", k);
    if (c.quota < 1) throw ConfigError("quota", "must be >= 1");
    if (c.max_attempts < c.quota) throw ConfigError("max_attempts", "must be >= quota");
    if (c.cap_deletions < 1) throw ConfigError("cap_deletions", "must be >= 1");
    for (const ExtremalCase& e : c.extremal)
        if (e.m < 1 || e.n < 1 || e.a < 1 || e.a >= e.b) throw ConfigError("extremal", "needs m, n >= 1 and 1 <= a < b");
}

CampaignConfig parse_config(std::string_view text) {
    CampaignConfig c;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    int line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no), "expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) throw ConfigError(key, "given twice");
        if (key == "theorems") {
            c.theorems.clear();
            for (const std::string& t : split(value, ',')) {
                try {
                    c.theorems.push_back(parse_theorem(t));
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(key, e.what());
                }
            }
        } else if (key == "vertices") {
            const auto dots = value.find("..");
            if (dots == std::string::npos) {
                c.min_vertices = c.max_vertices = parse_int<int>(key, value);
            } else {
                c.min_vertices = parse_int<int>(key, trim(value.substr(0, dots)));
                c.max_vertices = parse_int<int>(key, trim(value.substr(dots + 2)));
            }
        } else if (key == "p") {
            c.densities.clear();
            for (const std::string& p : split(value, ',')) {
                try {
                    c.densities.push_back(Fraction::parse(p));
                } catch (const std::exception&) {
                    throw ConfigError(key, "'" + p + "' is not a fraction");
                }
            }
        } else if (key == "seed") {
            c.seed = parse_int<std::uint64_t>(key, value);
        } else if (key == "ab") {
            c.ab.clear();
            for (const std::string& pair : split(value, ',')) {
                const auto parts = split(pair, ':');
                if (parts.size() != 2) throw ConfigError(key, "'" + pair + "' is not a:b");
                c.ab.emplace_back(parse_int<int>(key, parts[0]), parse_int<int>(key, parts[1]));
            }
        } else if (key == "n") {
            c.n_values = parse_int_list(key, value);
        } else if (key == "m") {
            c.m_values = parse_int_list(key, value);
        } else if (key == "k") {
            c.k_values = split(value, ',');
        } else if (key == "quota") {
            c.quota = parse_int<int>(key, value);
        } else if (key == "max_attempts") {
            c.max_attempts = parse_int<int>(key, value);
        } else if (key == "cap_subset") {
            c.cap_subset = parse_int<int>(key, value);
        } else if (key == "cap_deletions") {
            c.cap_deletions = parse_int<std::size_t>(key, value);
        } else if (key == "extremal") {
            c.extremal.clear();
            for (const std::string& item : split(value, ',')) {
                const auto parts = split(item, ':');
                if (parts.size() != 4) throw ConfigError(key, "'" + item + "' is not m:a:b:n");
                c.extremal.push_back({parse_int<int>(key, parts[0]), parse_int<int>(key, parts[1]), parse_int<int>(key, parts[2]),
                                      parse_int<int>(key, parts[3])});
            }
        } else if (key == "json") {
            c.json_path = value;
        } else if (key == "csv") {
            c.csv_path = value;
        } else {
            throw ConfigError(key, "unknown key");
        }
    }
    validate(c);
    return c;
}

std::string to_text(const CampaignConfig& c) {
    std::ostringstream out;
    out << "theorems=" << join(c.theorems, [](TheoremTag t) { return to_string(t); }) << '\n';
    out << "vertices=" << c.min_vertices << ".." << c.max_vertices << '\n';
    out << "p=" << join(c.densities, [](const Fraction& p) { return p.str(); }) << '\n';
    out << "seed=" << c.seed << '\n';
    out << "ab=" << join(c.ab, [](const std::pair<int, int>& x) { return std::to_string(x.first) + ":" + std::to_string(x.second); }) << '\n';
    out << "n=" << join(c.n_values, [](int x) { return std::to_string(x); }) << '\n';
    out << "m=" << join(c.m_values, [](int x) { return std::to_string(x); }) << '\n';
    out << "k=" << join(c.k_values, [](const std::string& x) { return x; }) << '\n';
    out << "quota=" << c.quota << '\n';
    out << "max_attempts=" << c.max_attempts << '\n';
    out << "cap_subset=" << c.cap_subset << '\n';
    out << "cap_deletions=" << c.cap_deletions << '\n';
    if (!c.extremal.empty())
        out << "extremal=" << join(c.extremal, [](const ExtremalCase& e) {
            return std::to_string(e.m) + ":" + std::to_string(e.a) + ":" + std::to_string(e.b) + ":" + std::to_string(e.n);
        }) << '\n';
    if (!c.json_path.empty()) out << "json=" << c.json_path << '\n';
    if (!c.csv_path.empty()) out << "csv=" << c.csv_path << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

CampaignReport run_campaign(const CampaignConfig& config, Execution exec) {
    validate(config);
    AvoidOptions opt;
    opt.caps.subset_vertices = config.cap_subset;
    opt.max_deletions = config.cap_deletions;
    opt.skip_conclusion_if_vacuous = true;

    CampaignReport report;
    Json instances = Json::array();
    const std::vector<Cell> cells = cells_of(config);
    const int batch = exec == Execution::Parallel ? 64 : 1;

    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const Cell& cell = cells[ci];
        CellSummary summary;
        summary.theorem = cell.theorem;
        summary.params = cell.params;
        summary.note = cell.skip;
        int accepted = 0;
        for (int start = 0; cell.skip.empty() && start < config.max_attempts && accepted < config.quota; start += batch) {
            const int count = std::min(batch, config.max_attempts - start);
            std::vector<Sample> samples(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
            for (int i = 0; i < count; ++i) {
                Sample& s = samples[static_cast<std::size_t>(i)];
                s = draw(config, ci, start + i);
                try {
                    s.verdict = check_theorem(cell.theorem, s.graph, cell.params, opt);
                } catch (const CapExceeded& e) {
                    s.capped = e.what();
                } catch (const std::exception& e) {
                    s.error = e.what();
                }
            }
            for (int i = 0; i < count && accepted < config.quota; ++i) {
                const Sample& s = samples[static_cast<std::size_t>(i)];
                if (!s.error.empty()) throw std::runtime_error("campaign " + to_string(cell.theorem) + ": " + s.error);
                ++summary.attempts;
                Json row;
                row["cell"] = ci;
                row["attempt"] = start + i;
                row["seed"] = s.seed;
                if (!s.capped.empty()) {
                    ++summary.capped;
                    row["status"] = "capped";
                    row["detail"] = s.capped;
                    row["graph6"] = emit_graph6(s.graph);
                    instances.push_back(std::move(row));
                    continue;
                }
                switch (s.verdict->outcome()) {
                    case Outcome::Vacuous: ++summary.vacuous; continue;  // rejected sample, counted only
                    case Outcome::Verified: ++summary.verified; break;
                    case Outcome::Counterexample: ++summary.counterexample; break;
                }
                ++accepted;
                row["status"] = to_string(s.verdict->outcome());
                row["verdict"] = verdict_json(*s.verdict, s.graph);
                instances.push_back(std::move(row));
            }
        }
        report.counts.verified += summary.verified;
        report.counts.vacuous += summary.vacuous;
        report.counts.counterexample += summary.counterexample;
        report.counts.capped += summary.capped;
        report.cells.push_back(std::move(summary));
    }

    Json extremal = Json::array();
    for (const ExtremalCase& e : config.extremal) {
        AvoidOptions local = opt;
        local.skip_conclusion_if_vacuous = false;
        const SharpnessReport r = check_sharpness(e.m, e.a, e.b, e.n, local);
        const bool reproduced = r.ratio < r.threshold && r.verdict.conclusion == false && r.demand > r.supply;
        (reproduced ? report.counts.expected_failure : report.counts.unexpected) += 1;
        Json row;
        row["params"] = {{"m", e.m}, {"a", e.a}, {"b", e.b}, {"n", e.n}};
        row["status"] = reproduced ? "expected-failure" : "sharpness-not-reproduced";
        row["ratio"] = r.ratio.str();
        row["threshold"] = r.threshold.str();
        row["V0"] = set_json(r.deleted);
        row["demand"] = r.demand;
        row["supply"] = r.supply;
        row["verdict"] = verdict_json(r.verdict, r.extremal.graph);
        extremal.push_back(std::move(row));
    }

    Json cells_json = Json::array();
    for (const CellSummary& s : report.cells) {
        Json params = Json::object();
        for (const auto& [k, v] : s.params) params[k] = v;
        Json row = {{"theorem", to_string(s.theorem)}, {"params", params},   {"attempts", s.attempts}, {"verified", s.verified},
                    {"vacuous", s.vacuous},            {"counterexample", s.counterexample}, {"capped", s.capped}};
        if (!s.note.empty()) row["skipped"] = s.note;
        cells_json.push_back(std::move(row));
    }

    Json& j = report.json;
    j["header"] = {{"timestamp", utc_now()}, {"version", FACTORBENCH_VERSION}, {"seed", config.seed}};
    j["config"] = to_text(config);
    j["counts"] = {{"verified", report.counts.verified},
                   {"vacuous", report.counts.vacuous},
                   {"counterexample", report.counts.counterexample},
                   {"capped", report.counts.capped},
                   {"expectedFailure", report.counts.expected_failure},
                   {"unexpected", report.counts.unexpected},
                   {"total", report.counts.total()}};
    j["cells"] = std::move(cells_json);
    j["instances"] = std::move(instances);
    j["extremal"] = std::move(extremal);
    return report;
}

std::string csv_summary(const CampaignReport& report) {
    std::ostringstream out;
    out << "theorem,params,attempts,verified,vacuous,counterexample,capped\n";
    for (const CellSummary& s : report.cells)
        out << to_string(s.theorem) << ',' << params_text(s.params) << ',' << s.attempts << ',' << s.verified << ',' << s.vacuous
            << ',' << s.counterexample << ',' << s.capped << '\n';
    return out.str();
}

}  // namespace factorbench

#pragma once

// Randomized theorem campaigns: premise-filtered random instances per
// parameter cell, plus the extremal family as expected failures.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "factorbench/avoidance.hpp"
#include "factorbench/fraction.hpp"
#include "factorbench/report.hpp"

namespace factorbench {

class ConfigError : public std::invalid_argument {
public:
    ConfigError(const std::string& field, const std::string& what)
        : std::invalid_argument("config field '" + field + "': " + what), field_(field) {}
    [[nodiscard]] const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct ExtremalCase {
    int m = 1;
    int a = 2;
    int b = 3;
    int n = 1;

    friend bool operator==(const ExtremalCase&, const ExtremalCase&) = default;
};

/// Flat key=value file, one key per line, '#' starts a comment. Lists are
/// comma separated; pairs use ':' (ab=2:3, extremal=m:a:b:n).
struct CampaignConfig {
    std::vector<TheoremTag> theorems{TheoremTag::A, TheoremTag::B, TheoremTag::C, TheoremTag::E, TheoremTag::LemmaD1};
    int min_vertices = 6;
    int max_vertices = 9;
    std::vector<Fraction> densities{Fraction(7, 10), Fraction(4, 5), Fraction(9, 10)};
    std::uint64_t seed = 1;
    std::vector<std::pair<int, int>> ab{{1, 2}, {2, 3}};
    std::vector<int> n_values{1, 2};
    std::vector<int> m_values{2, 3, 4};
    std::vector<std::string> k_values{"2", "b"};  // integers or the literal "b"
    int quota = 20;          // premise-satisfying instances per cell
    int max_attempts = 2000; // samples per cell before giving up
    int cap_subset = 12;
    std::size_t cap_deletions = 500;
    std::vector<ExtremalCase> extremal;
    std::string json_path;
    std::string csv_path;

    friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

/// Throws ConfigError naming the offending key.
[[nodiscard]] CampaignConfig parse_config(std::string_view text);
[[nodiscard]] std::string to_text(const CampaignConfig& config);
/// Checks cross-field constraints; parse_config calls it.
void validate(const CampaignConfig& config);

struct CellSummary {
    TheoremTag theorem = TheoremTag::A;
    Params params;
    int attempts = 0;
    int verified = 0;
    int vacuous = 0;
    int counterexample = 0;
    int capped = 0;
    std::string note;  // why a cell was skipped, if it was
};

struct CampaignCounts {
    int verified = 0;
    int vacuous = 0;
    int counterexample = 0;
    int capped = 0;
    int expected_failure = 0;
    int unexpected = 0;  // extremal rows that did not fail as constructed

    [[nodiscard]] int total() const { return verified + vacuous + counterexample + capped + expected_failure + unexpected; }
};

struct CampaignReport {
    std::vector<CellSummary> cells;
    CampaignCounts counts;
    Json json;

    [[nodiscard]] bool failed() const { return counts.counterexample > 0 || counts.unexpected > 0; }
};

/// Deterministic in the config: instances are drawn with per-sample seeds
/// and consumed in sample order whatever `exec` is. The only
/// run-dependent value is json["header"]["timestamp"].
[[nodiscard]] CampaignReport run_campaign(const CampaignConfig& config, Execution exec = Execution::Serial);

[[nodiscard]] std::string csv_summary(const CampaignReport& report);

}  // namespace factorbench

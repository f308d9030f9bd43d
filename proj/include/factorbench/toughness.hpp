#pragma once

#include <stdexcept>
#include <string>

#include "factorbench/fraction.hpp"
#include "factorbench/graph.hpp"
#include "factorbench/subset_scan.hpp"

namespace factorbench {

/// Isolated toughness I(G) with the set that attains it.
///
/// For a non-complete graph `value` = |witness| / isolated_at_witness and
/// isolated_at_witness >= 2. A complete graph has value n - 1, an empty
/// witness and isolated_at_witness = 0.
struct ToughnessReport {
    Fraction value;
    VertexMask witness = 0;
    int isolated_at_witness = 0;

    friend bool operator==(const ToughnessReport&, const ToughnessReport&) = default;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultBruteforceCap = 16;

/// Minimum over every S with i(G-S) >= 2; ties go to the lexicographically
/// smallest S. Throws CapExceeded when g.order() > cap.
[[nodiscard]] ToughnessReport isolated_toughness_bruteforce(const Graph& g, int cap = kDefaultBruteforceCap,
                                                            Execution exec = Execution::Serial);

/// Same value via independent sets: only S = N(I) for independent I with
/// |I| >= 2 is examined. Ties go to the lexicographically smallest N(I).
[[nodiscard]] ToughnessReport isolated_toughness(const Graph& g);

/// Checks that `report` is consistent with g: the witness reproduces the
/// value through isolated_count. Does not check minimality.
[[nodiscard]] bool witness_valid(const Graph& g, const ToughnessReport& report);

/// The toughness bounds appearing in the factor theorems.
enum class Bound {
    MaLiu,     // a-1 + a/b, plain [a,b]-factor existence
    TheoremA,  // a-1 + n + (a-1)/b, vertex deletion
    TheoremB,  // 1/(m-n), star factors after edge deletion, 1 <= n <= m/2
    TheoremC,  // a-1 + (a+2n-1)/b, matching deletion
    LemmaD1,   // a-1 + (a+kn-1)/b, 2 <= k <= b
};

[[nodiscard]] std::string to_string(Bound bound);
/// Accepts "3"/"ma-liu", "A", "B", "C", "D1".
[[nodiscard]] Bound parse_bound(const std::string& name);

struct BoundParams {
    int a = 1;
    int b = 2;
    int n = 1;
    int m = 2;
    int k = 2;
};

class ThresholdError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact threshold value; throws ThresholdError naming the bound when its
/// parameter constraints are violated.
[[nodiscard]] Fraction threshold(Bound bound, const BoundParams& p);

}  // namespace factorbench

#pragma once

#include <vector>

namespace factorbench {

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(V^3)). Vertices are 0..n-1; parallel edges are tolerated.
class BlossomMatcher {
public:
    explicit BlossomMatcher(int n);

    void add_edge(int u, int v);
    [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }

    /// Runs to a maximum matching. mate()[v] is v's partner or -1.
    int maximum();
    /// Stops at the first vertex that no augmenting path can reach; returns
    /// whether the matching is perfect.
    bool perfect();

    [[nodiscard]] const std::vector<int>& mate() const { return mate_; }

private:
    void greedy();
    int augment_from(int root);
    int lca(int a, int b);
    void mark_path(int v, int b, int child);

    std::vector<std::vector<int>> adj_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> used_;
    std::vector<char> blossom_;
    std::vector<char> lca_seen_;
    std::vector<int> queue_;
};

}  // namespace factorbench

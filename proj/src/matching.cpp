#include "factorbench/matching.hpp"

#include <algorithm>

namespace factorbench {

BlossomMatcher::BlossomMatcher(int n)
    : adj_(static_cast<std::size_t>(n)),
      mate_(static_cast<std::size_t>(n), -1),
      parent_(static_cast<std::size_t>(n), -1),
      base_(static_cast<std::size_t>(n)),
      used_(static_cast<std::size_t>(n)),
      blossom_(static_cast<std::size_t>(n)),
      lca_seen_(static_cast<std::size_t>(n)) {
    queue_.reserve(static_cast<std::size_t>(n));
}

void BlossomMatcher::add_edge(int u, int v) {
    if (u == v) return;
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
}

void BlossomMatcher::greedy() {
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        if (mate_[v] != -1) continue;
        for (int w : adj_[v]) {
            if (mate_[static_cast<std::size_t>(w)] == -1) {
                mate_[v] = w;
                mate_[static_cast<std::size_t>(w)] = static_cast<int>(v);
                break;
            }
        }
    }
}

int BlossomMatcher::lca(int a, int b) {
    std::fill(lca_seen_.begin(), lca_seen_.end(), 0);
    for (;;) {
        a = base_[static_cast<std::size_t>(a)];
        lca_seen_[static_cast<std::size_t>(a)] = 1;
        if (mate_[static_cast<std::size_t>(a)] == -1) break;
        a = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
        b = base_[static_cast<std::size_t>(b)];
        if (lca_seen_[static_cast<std::size_t>(b)]) return b;
        b = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
    }
}

void BlossomMatcher::mark_path(int v, int b, int child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
        const int m = mate_[static_cast<std::size_t>(v)];
        blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
        blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(m)])] = 1;
        parent_[static_cast<std::size_t>(v)] = child;
        child = m;
        v = parent_[static_cast<std::size_t>(m)];
    }
}

int BlossomMatcher::augment_from(int root) {
    const auto n = adj_.size();
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n; ++i) base_[i] = static_cast<int>(i);
    queue_.clear();
    used_[static_cast<std::size_t>(root)] = 1;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const int v = queue_[head];
        for (int to : adj_[static_cast<std::size_t>(v)]) {
            const auto t = static_cast<std::size_t>(to);
            if (base_[static_cast<std::size_t>(v)] == base_[t] || mate_[static_cast<std::size_t>(v)] == to) continue;
            if (to == root || (mate_[t] != -1 && parent_[static_cast<std::size_t>(mate_[t])] != -1)) {
                // Odd cycle: contract the blossom onto its base.
                const int cur = lca(v, to);
                std::fill(blossom_.begin(), blossom_.end(), 0);
                mark_path(v, cur, to);
                mark_path(to, cur, v);
                for (std::size_t i = 0; i < n; ++i) {
                    if (blossom_[static_cast<std::size_t>(base_[i])]) {
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue_.push_back(static_cast<int>(i));
                        }
                    }
                }
            } else if (parent_[t] == -1) {
                parent_[t] = v;
                if (mate_[t] == -1) return to;
                const int next = mate_[t];
                used_[static_cast<std::size_t>(next)] = 1;
                queue_.push_back(next);
            }
        }
    }
    return -1;
}

int BlossomMatcher::maximum() {
    greedy();
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        if (mate_[v] != -1) continue;
        int end = augment_from(static_cast<int>(v));
        while (end != -1) {
            const int pv = parent_[static_cast<std::size_t>(end)];
            const int ppv = mate_[static_cast<std::size_t>(pv)];
            mate_[static_cast<std::size_t>(end)] = pv;
            mate_[static_cast<std::size_t>(pv)] = end;
            end = ppv;
        }
    }
    return static_cast<int>(std::count_if(mate_.begin(), mate_.end(), [](int m) { return m != -1; })) / 2;
}

bool BlossomMatcher::perfect() {
    if (adj_.size() % 2 != 0) return false;
    greedy();
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        if (mate_[v] != -1) continue;
        int end = augment_from(static_cast<int>(v));
        // An exposed vertex with no augmenting path stays exposed in every
        // maximum matching.
        if (end == -1) return false;
        while (end != -1) {
            const int pv = parent_[static_cast<std::size_t>(end)];
            const int ppv = mate_[static_cast<std::size_t>(pv)];
            mate_[static_cast<std::size_t>(end)] = pv;
            mate_[static_cast<std::size_t>(pv)] = end;
            end = ppv;
        }
    }
    return true;
}

}  // namespace factorbench

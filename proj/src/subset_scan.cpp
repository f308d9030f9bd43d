#include "factorbench/subset_scan.hpp"

#include <stdexcept>

namespace factorbench {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
}

Combination::Combination(int n, int k) : n_(n), idx_(static_cast<std::size_t>(k)) {
    if (k < 0 || k > n) {
        done_ = true;
        return;
    }
    for (int i = 0; i < k; ++i) {
        idx_[static_cast<std::size_t>(i)] = i;
        mask_ |= bit(i);
    }
}

Combination::Combination(int n, int k, std::uint64_t rank) : n_(n), idx_(static_cast<std::size_t>(k)) {
    if (k < 0 || k > n || rank >= binomial(n, k)) {
        done_ = true;
        return;
    }
    int c = 0;
    for (int i = 0; i < k; ++i) {
        // Skip first elements whose block of completions lies wholly before rank.
        for (;; ++c) {
            const std::uint64_t block = binomial(n - c - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
        }
        idx_[static_cast<std::size_t>(i)] = c;
        mask_ |= bit(c);
        ++c;
    }
}

void Combination::next() {
    const int k = static_cast<int>(idx_.size());
    int i = k - 1;
    while (i >= 0 && idx_[static_cast<std::size_t>(i)] == n_ - k + i) --i;
    if (i < 0) {
        done_ = true;
        return;
    }
    ++idx_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
    mask_ = 0;
    for (int v : idx_) mask_ |= bit(v);
}

}  // namespace factorbench

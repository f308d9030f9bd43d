#pragma once

// Subset enumeration kernels shared by every "for all S" criterion.
//
// Subsets of {0..n-1} are visited size first, then in lexicographic order of
// their sorted member lists. The serial scan is the reference; the OpenMP
// scan must return the identical first hit, which tests/test_subset_scan.cpp
// checks on randomized predicates.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "factorbench/graph.hpp"

namespace factorbench {

/// Binomial coefficient, exact for n <= 64.
[[nodiscard]] std::uint64_t binomial(int n, int k);

/// k-combinations of {0..n-1} in lexicographic order.
class Combination {
public:
    Combination(int n, int k);
    /// Positions the iterator at the combination of the given lex rank.
    Combination(int n, int k, std::uint64_t rank);

    [[nodiscard]] VertexMask mask() const { return mask_; }
    [[nodiscard]] bool done() const { return done_; }
    void next();

private:
    int n_;
    std::vector<int> idx_;
    VertexMask mask_ = 0;
    bool done_ = false;
};

enum class Execution { Serial, Parallel };

/// Threshold on C(n, k) below which the parallel scan stays serial.
inline constexpr std::uint64_t kParallelGrain = 512;

template <class Pred>
std::optional<VertexMask> first_subset_serial(int n, Pred&& pred, int min_size = 0, int max_size = -1) {
    if (max_size < 0 || max_size > n) max_size = n;
    for (int k = min_size; k <= max_size; ++k) {
        for (Combination c(n, k); !c.done(); c.next()) {
            if (pred(c.mask())) return c.mask();
        }
    }
    return std::nullopt;
}

template <class Pred>
std::optional<VertexMask> first_subset_parallel(int n, Pred&& pred, int min_size = 0, int max_size = -1) {
    if (max_size < 0 || max_size > n) max_size = n;
    constexpr std::uint64_t chunk = 256;
    for (int k = min_size; k <= max_size; ++k) {
        const std::uint64_t total = binomial(n, k);
        if (total < kParallelGrain) {
            if (auto hit = first_subset_serial(n, pred, k, k)) return hit;
            continue;
        }
        const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
        std::atomic<std::uint64_t> best{total};
        std::atomic<VertexMask> best_mask{0};
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t ci = 0; ci < chunks; ++ci) {
            const std::uint64_t start = static_cast<std::uint64_t>(ci) * chunk;
            if (start >= best.load(std::memory_order_relaxed)) continue;
            const std::uint64_t stop = std::min(total, start + chunk);
            Combination c(n, k, start);
            for (std::uint64_t r = start; r < stop; ++r, c.next()) {
                if (r >= best.load(std::memory_order_relaxed)) break;
                if (pred(c.mask())) {
#pragma omp critical(factorbench_first_subset)
                    {
                        if (r < best.load()) {
                            best.store(r);
                            best_mask.store(c.mask());
                        }
                    }
                    break;
                }
            }
        }
        if (best.load() < total) return best_mask.load();
    }
    return std::nullopt;
}

template <class Pred>
std::optional<VertexMask> first_subset(Execution exec, int n, Pred&& pred, int min_size = 0, int max_size = -1) {
    if (exec == Execution::Parallel) return first_subset_parallel(n, pred, min_size, max_size);
    return first_subset_serial(n, pred, min_size, max_size);
}

/// Evaluates `fn` on every subset of {0..n-1} (mask order) and stores the
/// results; the parallel path only partitions the index range.
template <class T, class Fn>
std::vector<T> tabulate_subsets(Execution exec, int n, Fn&& fn) {
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
    std::vector<T> out(static_cast<std::size_t>(total));
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t s = 0; s < total; ++s) out[static_cast<std::size_t>(s)] = fn(static_cast<VertexMask>(s));
    } else {
        for (std::int64_t s = 0; s < total; ++s) out[static_cast<std::size_t>(s)] = fn(static_cast<VertexMask>(s));
    }
    return out;
}

}  // namespace factorbench

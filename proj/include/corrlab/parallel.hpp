#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace corrlab {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct index_range {
    std::uint64_t begin;
    std::uint64_t end;
};

// Splits [0, n) at the given cut points and then into fixed-size pieces.
// The grid depends only on n, chunk and cuts, never on the worker count, so
// reductions over it are reproducible bit for bit.
inline std::vector<index_range> make_chunks(std::uint64_t n, std::uint64_t chunk,
                                            std::vector<std::uint64_t> cuts = {}) {
    cuts.push_back(0);
    cuts.push_back(n);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<index_range> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        std::uint64_t a = cuts[i], b = cuts[i + 1];
        if (b > n) b = n;
        if (a >= b) continue;
        for (std::uint64_t s = a; s < b; s += chunk) out.push_back({s, std::min(s + chunk, b)});
    }
    return out;
}

// Runs fn over each chunk on up to `threads` workers; results land in a vector
// indexed by chunk, so the merge order is fixed regardless of scheduling.
template <typename Partial, typename Fn>
std::vector<Partial> map_chunks(const std::vector<index_range>& chunks, int threads, Fn&& fn) {
    std::vector<Partial> results(chunks.size());
    const int workers = std::min<int>(resolve_threads(threads), static_cast<int>(chunks.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < chunks.size(); ++i) results[i] = fn(chunks[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= chunks.size()) return;
                results[i] = fn(chunks[i]);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace corrlab

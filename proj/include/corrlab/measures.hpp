#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corrlab/common.hpp"
#include "corrlab/parallel.hpp"
#include "corrlab/stream.hpp"

namespace corrlab {

// Shift vector (r_1,...,r_m), strictly increasing non-negative offsets, m >= 2.
struct shift_vector {
    std::vector<std::uint64_t> offsets;

    static shift_vector of(std::vector<std::uint64_t> r) {
        if (r.size() < 2) throw validation_error("shift vector needs at least two offsets");
        for (std::size_t i = 0; i + 1 < r.size(); ++i)
            if (r[i] >= r[i + 1]) throw validation_error("shift vector offsets must be strictly increasing");
        return shift_vector{std::move(r)};
    }

    std::size_t order() const { return offsets.size(); }
    std::uint64_t first() const { return offsets.front(); }
    std::uint64_t last() const { return offsets.back(); }
    std::uint64_t range() const { return offsets.back() - offsets.front(); }
    bool normalized() const { return offsets.front() == 0; }
};

// Subtracts r_1 from every offset; returns the normalized vector and r_1.
inline std::pair<shift_vector, std::uint64_t> normalize_shift(const shift_vector& r) {
    const std::uint64_t mu = r.first();
    std::vector<std::uint64_t> out;
    out.reserve(r.order());
    for (std::uint64_t v : r.offsets) out.push_back(v - mu);
    return {shift_vector::of(std::move(out)), mu};
}

// delta(n+r_1,...,n+r_m): 0 if the symbols at all m positions agree, else 1.
inline int delta(std::span<const symbol_t> word, const shift_vector& r, std::uint64_t n) {
    if (n + r.last() >= word.size()) throw validation_error("delta: index out of bounds");
    const symbol_t s0 = word[n + r.offsets[0]];
    for (std::size_t j = 1; j < r.offsets.size(); ++j)
        if (word[n + r.offsets[j]] != s0) return 1;
    return 0;
}

struct correlation_checkpoint {
    std::uint64_t n;
    std::uint64_t delta_sum;
    double mean;
};

struct correlation_report {
    std::string spec_id;
    shift_vector shift{{0, 1}};
    std::uint64_t n_samples = 0;
    std::uint64_t delta_sum = 0;
    double mean = 0.0;
    double target = 0.0;  // 1 - 1/k^(m-1)
    std::vector<correlation_checkpoint> checkpoints;
};

namespace detail {

inline std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n) {
    std::vector<std::uint64_t> cuts;
    for (int t = 0; t < 64; ++t) {
        const std::uint64_t v = ((n - 1) >> t) + 1;  // ceil(n / 2^t)
        cuts.push_back(v);
        if (v == 1) break;
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

inline double correlation_target(int k, std::size_t m) {
    return 1.0 - 1.0 / std::pow(static_cast<double>(k), static_cast<double>(m - 1));
}

// delta over a contiguous symbol buffer where buf[i] = x(base + i) and the
// tuple for step n uses offsets (r_j - r_1).
inline std::uint64_t delta_sum_over(std::span<const symbol_t> buf, std::span<const std::uint64_t> rel,
                                    std::uint64_t count) {
    std::uint64_t sum = 0;
    if (rel.size() == 2) {
        const std::uint64_t off = rel[1];
        for (std::uint64_t i = 0; i < count; ++i) sum += buf[i] != buf[i + off];
        return sum;
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        const symbol_t s0 = buf[i];
        int d = 0;
        for (std::size_t j = 1; j < rel.size(); ++j) d |= buf[i + rel[j]] != s0;
        sum += static_cast<std::uint64_t>(d);
    }
    return sum;
}

template <typename ChunkSum>
correlation_report assemble_report(std::string spec_id, const shift_vector& r, std::uint64_t n, int k,
                                   int threads, ChunkSum&& chunk_sum) {
    if (n == 0) throw validation_error("corr_sum: N must be >= 1");
    auto cuts = geometric_checkpoints(n);
    auto chunks = make_chunks(n, std::uint64_t{1} << 20, cuts);
    auto partials = map_chunks<std::uint64_t>(chunks, threads, chunk_sum);

    correlation_report rep;
    rep.spec_id = std::move(spec_id);
    rep.shift = r;
    rep.n_samples = n;
    rep.target = correlation_target(k, r.order());
    std::uint64_t acc = 0;
    std::size_t cut_idx = 0;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        acc += partials[i];
        while (cut_idx < cuts.size() && cuts[cut_idx] == chunks[i].end) {
            rep.checkpoints.push_back({cuts[cut_idx], acc, static_cast<double>(acc) / static_cast<double>(cuts[cut_idx])});
            ++cut_idx;
        }
    }
    rep.delta_sum = acc;
    rep.mean = static_cast<double>(acc) / static_cast<double>(n);
    return rep;
}

}  // namespace detail

// Sum of delta(n+r_1,...,n+r_m) over n < N for a literal word. The alphabet
// size only affects the reported target; pass k = 0 to infer it.
inline correlation_report corr_sum(std::span<const symbol_t> word, const shift_vector& r, std::uint64_t n,
                                   int k = 0, int threads = 0) {
    if (n == 0) throw validation_error("corr_sum: N must be >= 1");
    if (n - 1 + r.last() >= word.size())
        throw validation_error("corr_sum: word too short for requested N and shifts");
    if (k == 0) {
        for (symbol_t s : word) k = std::max(k, static_cast<int>(s) + 1);
        k = std::max(k, 2);
    }
    std::vector<std::uint64_t> rel;
    for (std::uint64_t v : r.offsets) rel.push_back(v - r.first());
    const std::uint64_t base = r.first();
    return detail::assemble_report("word", r, n, k, threads, [&](index_range c) {
        return detail::delta_sum_over(word.subspan(base + c.begin), rel, c.end - c.begin);
    });
}

// Streaming overload: one pass over a-hat(0 .. N-1+r_m) in chunks.
inline correlation_report corr_sum(const sequence_spec& spec, const shift_vector& r, std::uint64_t n,
                                   int threads = 0) {
    if (n == 0) throw validation_error("corr_sum: N must be >= 1");
    const symbol_source src(spec);
    std::vector<std::uint64_t> rel;
    for (std::uint64_t v : r.offsets) rel.push_back(v - r.first());
    const std::uint64_t range = r.range();
    return detail::assemble_report(spec.id(), r, n, src.k(), threads, [&](index_range c) {
        std::vector<symbol_t> buf(c.end - c.begin + range);
        src.fill(c.begin + r.first(), buf);
        return detail::delta_sum_over(buf, rel, c.end - c.begin);
    });
}

struct window_min_report {
    std::uint64_t min_sum = 0;   // sum of delta over the minimizing window
    std::uint64_t window = 1;    // d
    std::uint64_t scan_n = 0;    // window starts scanned: 0 <= n <= scan_n - window
    std::uint64_t argmin = 0;
    double value = 0.0;          // min_sum / d
};

namespace detail {

struct window_partial {
    std::uint64_t min_sum = ~std::uint64_t{0};
    std::uint64_t argmin = 0;
};

// min over window starts in [c.begin, c.end) given delta values reachable
// through `delta_at`, a callable over absolute indices.
template <typename DeltaBuf>
window_partial window_min_chunk(const DeltaBuf& d, std::uint64_t begin, std::uint64_t end, std::uint64_t w) {
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i < w; ++i) sum += d(begin + i);
    window_partial best{sum, begin};
    for (std::uint64_t s = begin + 1; s < end; ++s) {
        sum += d(s + w - 1);
        sum -= d(s - 1);
        if (sum < best.min_sum) {
            best.min_sum = sum;
            best.argmin = s;
        }
    }
    return best;
}

}  // namespace detail

// Finite-scan analog of the local correlation minimum: min over
// 0 <= n <= N-d of (1/d) * sum_{i=n}^{n+d-1} delta(i+r_1,...,i+r_m).
inline window_min_report d_window_min(std::span<const symbol_t> word, const shift_vector& r, std::uint64_t d,
                                      std::uint64_t n, int threads = 0) {
    if (d < 1) throw validation_error("d_window_min: d must be >= 1");
    if (d > n) throw validation_error("d_window_min: d exceeds scan length N");
    if (n - 1 + r.last() >= word.size())
        throw validation_error("d_window_min: word too short for requested N and shifts");
    const std::uint64_t starts = n - d + 1;
    auto chunks = make_chunks(starts, std::uint64_t{1} << 20);
    auto rel = r;  // captured by value below
    auto partials = map_chunks<detail::window_partial>(chunks, threads, [&](index_range c) {
        // materialize delta for [c.begin, c.end - 1 + d)
        const std::uint64_t len = c.end - c.begin + d - 1;
        std::vector<std::uint8_t> dv(len);
        for (std::uint64_t i = 0; i < len; ++i)
            dv[i] = static_cast<std::uint8_t>(delta(word, rel, c.begin + i));
        return detail::window_min_chunk([&](std::uint64_t abs) { return dv[abs - c.begin]; }, c.begin, c.end, d);
    });
    detail::window_partial best = partials.front();
    for (const auto& p : partials)
        if (p.min_sum < best.min_sum || (p.min_sum == best.min_sum && p.argmin < best.argmin)) best = p;
    return {best.min_sum, d, n, best.argmin, static_cast<double>(best.min_sum) / static_cast<double>(d)};
}

inline window_min_report d_window_min(const sequence_spec& spec, const shift_vector& r, std::uint64_t d,
                                      std::uint64_t n, int threads = 0) {
    if (d < 1) throw validation_error("d_window_min: d must be >= 1");
    if (d > n) throw validation_error("d_window_min: d exceeds scan length N");
    const symbol_source src(spec);
    std::vector<std::uint64_t> rel;
    for (std::uint64_t v : r.offsets) rel.push_back(v - r.first());
    const std::uint64_t range = r.range();
    const std::uint64_t starts = n - d + 1;
    auto chunks = make_chunks(starts, std::uint64_t{1} << 20);
    auto partials = map_chunks<detail::window_partial>(chunks, threads, [&](index_range c) {
        const std::uint64_t steps = c.end - c.begin + d - 1;  // delta indices covered
        std::vector<symbol_t> buf(steps + range);
        src.fill(c.begin + r.first(), buf);
        std::vector<std::uint8_t> dv(steps);
        for (std::uint64_t i = 0; i < steps; ++i) {
            const symbol_t s0 = buf[i];
            int dd = 0;
            for (std::size_t j = 1; j < rel.size(); ++j) dd |= buf[i + rel[j]] != s0;
            dv[i] = static_cast<std::uint8_t>(dd);
        }
        return detail::window_min_chunk([&](std::uint64_t abs) { return dv[abs - c.begin]; }, c.begin, c.end, d);
    });
    detail::window_partial best = partials.front();
    for (const auto& p : partials)
        if (p.min_sum < best.min_sum || (p.min_sum == best.min_sum && p.argmin < best.argmin)) best = p;
    return {best.min_sum, d, n, best.argmin, static_cast<double>(best.min_sum) / static_cast<double>(d)};
}

// Finite form of the window-vs-global inequality: the minimum over disjoint
// length-d blocks of the block mean never exceeds the mean over the blocks'
// union. Uses as many whole blocks as the word supports.
inline bool theorem2_finite_check(std::span<const symbol_t> word, const shift_vector& r, std::uint64_t d) {
    if (d < 1) throw validation_error("theorem2_finite_check: d must be >= 1");
    if (word.size() < r.last() + d + 1)
        throw validation_error("theorem2_finite_check: word too short for one block plus shift slack");
    const std::uint64_t usable = word.size() - r.last();
    const std::uint64_t blocks = usable / d;
    std::uint64_t total = 0;
    std::uint64_t min_block = ~std::uint64_t{0};
    for (std::uint64_t b = 0; b < blocks; ++b) {
        std::uint64_t s = 0;
        for (std::uint64_t i = 0; i < d; ++i) s += static_cast<std::uint64_t>(delta(word, r, b * d + i));
        total += s;
        min_block = std::min(min_block, s);
    }
    // min_block/d <= total/(blocks*d), compared exactly
    return min_block * blocks <= total;
}

}  // namespace corrlab

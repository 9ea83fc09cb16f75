#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "corrlab/common.hpp"
#include "corrlab/digits.hpp"
#include "corrlab/rng.hpp"
#include "corrlab/spec.hpp"

namespace corrlab {

namespace detail {

// One digit-pair chain: evaluates a(n) mod `mod` where a(base*n + j) = a(n) + g(j, n),
// i.e. a(n) = init[d_L] + sum_{v<L} g(d_v, d_{v+1}) over the base-`base` digits of n
// (least significant digit d_0, top digit d_L indexing the initial value).
//
// The cursor keeps the digits of the current index together with the partial
// chain values tail[i] = (value of the chain restricted to digits i and above),
// so advancing by one costs O(1) amortized: a carry that reaches digit position
// c happens once every base^c steps and only invalidates tail[0..c].
//
// Table entries and init values are expected already reduced mod `mod`. For a
// squarefree composition each factor chain is instantiated with its own base
// but with the shared modulus k and tables pre-multiplied by the CRT weight,
// so the composed value is just the sum of chain values mod k.
class chain_cursor {
public:
    chain_cursor() = default;

    chain_cursor(int base, int mod, std::vector<int> table, std::vector<int> init, std::uint64_t start)
        : base_(base), mod_(mod), table_(std::move(table)), init_(std::move(init)) {
        const auto e = digit_expansion::of(start, base_);
        digits_ = e.digits;
        tail_.resize(digits_.size());
        rebuild_from(digits_.size() - 1);
    }

    int value() const { return tail_[0]; }

    void advance() {
        std::size_t i = 0;
        while (i < digits_.size() && digits_[i] == base_ - 1) {
            digits_[i] = 0;
            ++i;
        }
        if (i == digits_.size()) {
            digits_.push_back(1);
            tail_.push_back(0);
        } else {
            ++digits_[i];
        }
        rebuild_from(i);
    }

private:
    void rebuild_from(std::size_t pos) {
        const std::size_t top = digits_.size() - 1;
        std::size_t i;
        if (pos >= top) {
            tail_[top] = init_[static_cast<std::size_t>(digits_[top])];
            i = top;  // recompute everything below the top
        } else {
            i = pos + 1;  // recompute pos..0
        }
        while (i-- > 0) {
            const int g = table_[static_cast<std::size_t>(digits_[i]) * base_ + digits_[i + 1]];
            int v = tail_[i + 1] + g;
            if (v >= mod_) v -= mod_;
            tail_[i] = v;
        }
    }

    int base_ = 2;
    int mod_ = 2;
    std::vector<int> table_;  // base x base, entries in [0, mod)
    std::vector<int> init_;   // length base, entries in [0, mod)
    std::vector<int> digits_;
    std::vector<int> tail_;
};

struct chain_recipe {
    int base;
    std::vector<int> table;
    std::vector<int> init;
};

}  // namespace detail

// Evaluation plan for a validated spec: either a set of digit-pair chains
// (GRS, squarefree GRS, Thue-Morse) or a counter-based generator (iid).
class symbol_source {
public:
    explicit symbol_source(const sequence_spec& spec) : k_(spec.k()) {
        if (const auto* p = std::get_if<prime_grs>(&spec.value)) {
            chains_.push_back({p->k, p->g.values, p->init});
        } else if (const auto* s = std::get_if<squarefree_grs>(&spec.value)) {
            // a(n) = sum_i c_i a_i(n) with c_1 = 1, c_i = p_1...p_{i-1}; folding
            // the weight into the factor tables keeps every chain mod k.
            long long c = 1;
            for (const auto& f : s->factors) {
                detail::chain_recipe r;
                r.base = f.p;
                r.table.reserve(f.g.values.size());
                for (int v : f.g.values) r.table.push_back(static_cast<int>((c * v) % k_));
                r.init.reserve(f.init.size());
                for (int v : f.init) r.init.push_back(static_cast<int>((c * v) % k_));
                chains_.push_back(std::move(r));
                c *= f.p;
            }
        } else if (const auto* t = std::get_if<thue_morse>(&spec.value)) {
            // digit sum mod k is the chain with g(j, n) = j and init[j] = j
            detail::chain_recipe r;
            r.base = t->k;
            r.table.resize(static_cast<std::size_t>(t->k) * t->k);
            r.init.resize(static_cast<std::size_t>(t->k));
            for (int j = 0; j < t->k; ++j) {
                r.init[static_cast<std::size_t>(j)] = j;
                for (int c2 = 0; c2 < t->k; ++c2) r.table[static_cast<std::size_t>(j) * t->k + c2] = j;
            }
            chains_.push_back(std::move(r));
        } else {
            seed_ = std::get<iid_random>(spec.value).seed;
            iid_ = true;
        }
    }

    int k() const { return k_; }

    symbol_t at(std::uint64_t n) const {
        if (iid_) return iid_symbol(seed_, 0, n, k_);
        int v = 0;
        for (const auto& r : chains_) {
            v += detail::chain_cursor(r.base, k_, r.table, r.init, n).value();
            if (v >= k_) v -= k_;
        }
        return static_cast<symbol_t>(v);
    }

    // Fills out[i] = symbol(start + i). Amortized O(1) per symbol.
    void fill(std::uint64_t start, std::span<symbol_t> out) const {
        if (out.empty()) return;
        if (iid_) {
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = iid_symbol(seed_, 0, start + i, k_);
            return;
        }
        if (chains_.size() == 1) {
            detail::chain_cursor c(chains_[0].base, k_, chains_[0].table, chains_[0].init, start);
            for (std::size_t i = 0; i < out.size(); ++i) {
                out[i] = static_cast<symbol_t>(c.value());
                c.advance();
            }
            return;
        }
        std::vector<detail::chain_cursor> cs;
        cs.reserve(chains_.size());
        for (const auto& r : chains_) cs.emplace_back(r.base, k_, r.table, r.init, start);
        for (std::size_t i = 0; i < out.size(); ++i) {
            int v = 0;
            for (auto& c : cs) {
                v += c.value();
                if (v >= k_) v -= k_;
            }
            out[i] = static_cast<symbol_t>(v);
            for (auto& c : cs) c.advance();
        }
    }

private:
    int k_;
    std::vector<detail::chain_recipe> chains_;
    std::uint64_t seed_ = 0;
    bool iid_ = false;
};

// a-hat(n): the n-th symbol of the sequence described by the spec.
inline symbol_t eval_a(const sequence_spec& spec, std::uint64_t n) { return symbol_source(spec).at(n); }

inline std::vector<symbol_t> generate_prefix(const sequence_spec& spec, std::uint64_t n) {
    if (n > (std::uint64_t{1} << 40))
        throw resource_error("generate_prefix: requested length exceeds addressable memory");
    std::vector<symbol_t> out;
    try {
        out.resize(n);
    } catch (const std::bad_alloc&) {
        throw resource_error("generate_prefix: allocation failed for N=" + std::to_string(n));
    }
    symbol_source(spec).fill(0, out);
    return out;
}

}  // namespace corrlab

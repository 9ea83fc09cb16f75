#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "corrlab/common.hpp"
#include "corrlab/gtable.hpp"

namespace corrlab {

struct prime_grs {
    int k = 2;
    gtable g;
    std::vector<int> init;  // a(0),...,a(k-1), residues mod k
};

struct grs_factor {
    int p = 2;
    gtable g;               // over base p
    std::vector<int> init;  // length p, residues mod p
};

struct squarefree_grs {
    std::vector<grs_factor> factors;  // pairwise distinct primes

    int k() const {
        long long prod = 1;
        for (const auto& f : factors) prod *= f.p;
        return static_cast<int>(prod);
    }
};

struct thue_morse {
    int k = 2;  // digit sum of n in base k, mod k
};

struct iid_random {
    int k = 2;
    std::uint64_t seed = 0;
};

struct sequence_spec {
    std::variant<prime_grs, squarefree_grs, thue_morse, iid_random> value;

    int k() const {
        return std::visit(
            [](const auto& s) -> int {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, squarefree_grs>)
                    return s.k();
                else
                    return s.k;
            },
            value);
    }

    std::string id() const {
        if (const auto* p = std::get_if<prime_grs>(&value))
            return "prime-grs(k=" + std::to_string(p->k) + ")";
        if (const auto* s = std::get_if<squarefree_grs>(&value)) {
            std::string out = "squarefree-grs(k=" + std::to_string(s->k()) + ",p=";
            for (std::size_t i = 0; i < s->factors.size(); ++i) {
                if (i) out += "*";
                out += std::to_string(s->factors[i].p);
            }
            return out + ")";
        }
        if (const auto* t = std::get_if<thue_morse>(&value))
            return "thue-morse(k=" + std::to_string(t->k) + ")";
        const auto& r = std::get<iid_random>(value);
        return "iid(k=" + std::to_string(r.k) + ",seed=" + std::to_string(r.seed) + ")";
    }

    // Throws validation_error with a diagnostic naming the violated invariant.
    void validate() const;
};

namespace detail {

inline void check_init(const std::vector<int>& init, int base, const std::string& what) {
    if (static_cast<int>(init.size()) != base)
        throw validation_error(what + ": init must have exactly " + std::to_string(base) + " entries");
    for (int v : init)
        if (v < 0 || v >= base)
            throw validation_error(what + ": init entries must lie in {0,...," + std::to_string(base - 1) + "}");
}

inline void check_admissible(const gtable& g, const std::string& what) {
    if (auto bad = admissibility_violation(g)) {
        throw validation_error(what + ": g is not admissible: differences for (u=" + std::to_string(bad->first) +
                               ", i=" + std::to_string(bad->second) + ") do not cover all residues mod " +
                               std::to_string(g.k));
    }
}

}  // namespace detail

inline void sequence_spec::validate() const {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, prime_grs>) {
                if (!is_prime(static_cast<std::uint64_t>(s.k)))
                    throw validation_error("prime-grs: k is not prime (k=" + std::to_string(s.k) + ")");
                if (s.g.k != s.k) throw validation_error("prime-grs: g table size does not match k");
                detail::check_init(s.init, s.k, "prime-grs");
                detail::check_admissible(s.g, "prime-grs");
            } else if constexpr (std::is_same_v<T, squarefree_grs>) {
                if (s.factors.empty()) throw validation_error("squarefree-grs: at least one factor required");
                long long prod = 1;
                for (std::size_t i = 0; i < s.factors.size(); ++i) {
                    const auto& f = s.factors[i];
                    if (!is_prime(static_cast<std::uint64_t>(f.p)))
                        throw validation_error("squarefree-grs: factor p=" + std::to_string(f.p) +
                                               " is not prime, so k is not squarefree");
                    for (std::size_t j = 0; j < i; ++j)
                        if (s.factors[j].p == f.p)
                            throw validation_error("squarefree-grs: repeated prime p=" + std::to_string(f.p));
                    if (f.g.k != f.p)
                        throw validation_error("squarefree-grs: g table size does not match factor prime");
                    detail::check_init(f.init, f.p, "squarefree-grs factor p=" + std::to_string(f.p));
                    detail::check_admissible(f.g, "squarefree-grs factor p=" + std::to_string(f.p));
                    prod *= f.p;
                    if (prod > kMaxAlphabet)
                        throw validation_error("squarefree-grs: product of primes exceeds supported alphabet size");
                }
            } else {
                if (s.k < 2 || s.k > kMaxAlphabet)
                    throw validation_error("spec: k must lie in [2," + std::to_string(kMaxAlphabet) + "]");
            }
        },
        value);
}

// Convenience constructors for the worked examples used throughout the tests
// and sample spec files.
inline sequence_spec make_prime_grs(int k, gtable g, std::vector<int> init = {}) {
    if (init.empty()) init.assign(static_cast<std::size_t>(k), 0);
    sequence_spec s{prime_grs{k, std::move(g), std::move(init)}};
    s.validate();
    return s;
}

// k = 2, g(1,1) = 1: the Rudin-Shapiro sequence over {0,1}.
inline sequence_spec rudin_shapiro_spec() { return make_prime_grs(2, gtable::canonical(2)); }

// k = 2, g(1,0) = 1: counts the binary block "01".
inline sequence_spec block01_spec() { return make_prime_grs(2, gtable::block_indicator(2, 0, 1)); }

// k = 3, g(j,n) = 1 iff j == n mod 3: counts the ternary blocks (0,0),(1,1),(2,2).
inline sequence_spec ternary_diagonal_spec() {
    gtable g;
    g.k = 3;
    g.values.assign(9, 0);
    for (int j = 0; j < 3; ++j) g.values[static_cast<std::size_t>(j) * 3 + j] = 1;
    return make_prime_grs(3, std::move(g));
}

inline sequence_spec make_squarefree_grs(std::vector<grs_factor> factors) {
    for (auto& f : factors)
        if (f.init.empty()) f.init.assign(static_cast<std::size_t>(f.p), 0);
    sequence_spec s{squarefree_grs{std::move(factors)}};
    s.validate();
    return s;
}

// Squarefree composition with the canonical table for each prime.
inline sequence_spec canonical_squarefree_spec(std::vector<int> primes) {
    std::vector<grs_factor> fs;
    fs.reserve(primes.size());
    for (int p : primes) fs.push_back(grs_factor{p, gtable::canonical(p), std::vector<int>(static_cast<std::size_t>(p), 0)});
    return make_squarefree_grs(std::move(fs));
}

}  // namespace corrlab

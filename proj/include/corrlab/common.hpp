#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace corrlab {

using symbol_t = std::uint16_t;

// Alphabet sizes are capped so per-spec tables (k x k) stay small.
inline constexpr int kMaxAlphabet = 4096;

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct search_error : std::runtime_error {
    search_error(const std::string& msg, std::uint64_t d, std::uint64_t i)
        : std::runtime_error(msg), event_d(d), event_i(i) {}
    std::uint64_t event_d;
    std::uint64_t event_i;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

}  // namespace corrlab

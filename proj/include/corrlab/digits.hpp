#pragma once

#include <cstdint>
#include <vector>

#include "corrlab/common.hpp"

namespace corrlab {

// Base-b expansion of a non-negative integer, least significant digit first.
// The digit list never has a trailing (most significant) zero except for the
// number 0 itself, which is the single digit [0].
struct digit_expansion {
    int base = 2;
    std::vector<int> digits;

    static digit_expansion of(std::uint64_t n, int base) {
        if (base < 2) throw validation_error("digit_expansion: base must be >= 2");
        digit_expansion e;
        e.base = base;
        do {
            e.digits.push_back(static_cast<int>(n % static_cast<std::uint64_t>(base)));
            n /= static_cast<std::uint64_t>(base);
        } while (n > 0);
        return e;
    }

    std::uint64_t value() const {
        std::uint64_t v = 0;
        for (std::size_t i = digits.size(); i-- > 0;)
            v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(digits[i]);
        return v;
    }
};

// Number of occurrences of the ordered adjacent pair (hi, lo) in the base-b
// expansion of n, read most significant digit first.
inline std::uint64_t block_count(int base, int hi, int lo, std::uint64_t n) {
    if (hi < 0 || hi >= base || lo < 0 || lo >= base)
        throw validation_error("block_count: block digits out of range");
    const auto e = digit_expansion::of(n, base);
    std::uint64_t c = 0;
    for (std::size_t i = 0; i + 1 < e.digits.size(); ++i)
        if (e.digits[i + 1] == hi && e.digits[i] == lo) ++c;
    return c;
}

}  // namespace corrlab

#pragma once

#include <cstdint>

#include "corrlab/common.hpp"

namespace corrlab {

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based generator: the value at (seed, stream, index) is a pure
// function of its key, so random access and streaming agree by construction.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t x = mix64(seed);
    x = mix64(x ^ stream);
    return mix64(x ^ index);
}

// Maps a 64-bit word to {0,...,k-1} by the multiply-shift method.
inline symbol_t uniform_symbol(std::uint64_t word, int k) {
    return static_cast<symbol_t>((static_cast<unsigned __int128>(word) * static_cast<unsigned __int128>(k)) >> 64);
}

inline symbol_t iid_symbol(std::uint64_t seed, std::uint64_t stream, std::uint64_t index, int k) {
    return uniform_symbol(counter_hash(seed, stream, index), k);
}

// Uniform double in [0,1); used only by Monte-Carlo style checks.
inline double uniform_unit(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace corrlab

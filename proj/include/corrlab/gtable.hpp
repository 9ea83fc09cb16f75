#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "corrlab/common.hpp"

namespace corrlab {

// k x k table of the recurrence increment g(j, n): rows are indexed by the
// low digit j, columns by n mod k. Entries are kept reduced mod k.
struct gtable {
    int k = 0;
    std::vector<int> values;  // row-major, values[j * k + c] = g(j, c)

    int at(int j, int c) const { return values[static_cast<std::size_t>(j) * k + c]; }

    static gtable from_rows(int k, const std::vector<std::vector<long long>>& rows) {
        if (k < 2 || k > kMaxAlphabet) throw validation_error("gtable: k out of range");
        if (static_cast<int>(rows.size()) != k) throw validation_error("gtable: expected k rows");
        gtable g;
        g.k = k;
        g.values.reserve(static_cast<std::size_t>(k) * k);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != k) throw validation_error("gtable: expected k columns per row");
            for (long long v : row) {
                long long r = v % k;
                if (r < 0) r += k;
                g.values.push_back(static_cast<int>(r));
            }
        }
        return g;
    }

    // g(j, n) = j * (n mod k), reduced mod k.
    static gtable canonical(int k) {
        if (k < 2 || k > kMaxAlphabet) throw validation_error("gtable: k out of range");
        gtable g;
        g.k = k;
        g.values.resize(static_cast<std::size_t>(k) * k);
        for (int j = 0; j < k; ++j)
            for (int c = 0; c < k; ++c) g.values[static_cast<std::size_t>(j) * k + c] = (j * c) % k;
        return g;
    }

    // All entries zero except g(hi_prev...): counts the digit block (hi, lo)
    // when used as the recurrence table.
    static gtable block_indicator(int k, int hi, int lo) {
        gtable g;
        g.k = k;
        g.values.assign(static_cast<std::size_t>(k) * k, 0);
        g.values[static_cast<std::size_t>(lo) * k + hi] = 1;
        return g;
    }
};

// Admissibility requires that for every 0 <= u < u+i <= k-1 the map
// n -> (g(u+i, n) - g(u, n)) mod k is a bijection of {0,...,k-1}.
// Returns the first violating (u, i) pair, or nullopt if admissible.
inline std::optional<std::pair<int, int>> admissibility_violation(const gtable& g) {
    const int k = g.k;
    std::vector<char> seen(static_cast<std::size_t>(k));
    for (int u = 0; u < k; ++u) {
        for (int i = 1; u + i < k; ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int c = 0; c < k; ++c) {
                int d = g.at(u + i, c) - g.at(u, c);
                if (d < 0) d += k;
                seen[static_cast<std::size_t>(d)] = 1;
            }
            for (int d = 0; d < k; ++d)
                if (!seen[static_cast<std::size_t>(d)]) return std::make_pair(u, i);
        }
    }
    return std::nullopt;
}

inline bool validate_admissible(const gtable& g) { return !admissibility_violation(g).has_value(); }

}  // namespace corrlab

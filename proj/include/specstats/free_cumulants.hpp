#pragma once

#include "specstats/set_partitions.hpp"

#include <vector>

namespace specstats {

// m_i = sum over noncrossing partitions pi of [i] of prod_{B in pi} c_{|B|}.
template <class T>
std::vector<T> free_cumulants_to_moments(const std::vector<T>& c) {
    const int d = static_cast<int>(c.size());
    std::vector<T> m;
    m.reserve(c.size());
    for (int i = 1; i <= d; ++i) {
        T acc(0);
        for (const auto& pi : enumerate_noncrossing(i)) {
            T prod(1);
            for (const auto& b : pi.blocks()) prod *= c[b.size() - 1];
            acc += prod;
        }
        m.push_back(acc);
    }
    return m;
}

// Inverse direction by triangular recursion: the single-block partition is
// the only one contributing c_i, every other noncrossing partition involves
// lower-order cumulants only.
template <class T>
std::vector<T> moments_to_free_cumulants(const std::vector<T>& m) {
    const int d = static_cast<int>(m.size());
    std::vector<T> c;
    c.reserve(m.size());
    for (int i = 1; i <= d; ++i) {
        T rest(0);
        for (const auto& pi : enumerate_noncrossing(i)) {
            if (pi.block_count() == 1) continue;
            T prod(1);
            for (const auto& b : pi.blocks()) prod *= c[b.size() - 1];
            rest += prod;
        }
        c.push_back(m[static_cast<std::size_t>(i) - 1] - rest);
    }
    return c;
}

}  // namespace specstats

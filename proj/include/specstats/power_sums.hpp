#pragma once

#include "specstats/rational.hpp"

#include <stdexcept>
#include <vector>

namespace specstats {

// (n; S_1..S_d) with S_r = sum_j x_j^r: the sufficient statistic for every
// symmetric function in this library.
template <class T>
struct PowerSums {
    int n = 0;
    std::vector<T> sums;  // sums[r-1] = S_r

    const T& sum(int r) const {
        if (r < 1 || r > static_cast<int>(sums.size()))
            throw std::invalid_argument("PowerSums: S_" + std::to_string(r) + " not available");
        return sums[static_cast<std::size_t>(r) - 1];
    }
    int max_degree() const { return static_cast<int>(sums.size()); }
};

template <class T>
PowerSums<T> power_sums(const std::vector<T>& x, int d) {
    if (x.empty()) throw std::invalid_argument("power_sums: empty sample");
    if (d < 1) throw std::invalid_argument("power_sums: degree must be >= 1");
    PowerSums<T> out;
    out.n = static_cast<int>(x.size());
    out.sums.assign(static_cast<std::size_t>(d), T(0));
    for (const T& v : x) {
        T p = v;
        for (int r = 1; r <= d; ++r) {
            out.sums[static_cast<std::size_t>(r) - 1] += p;
            if (r < d) p *= v;
        }
    }
    return out;
}

}  // namespace specstats

#include "specstats/exact_linalg.hpp"

#include "specstats/errors.hpp"

#include <stdexcept>
#include <utility>

namespace specstats {

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_exact: matrix not square");

    // augmented integer matrix, each row scaled by the lcm of its denominators
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        Int l = 1;
        for (std::size_t c = 0; c < n; ++c) l = lcm(l, denominator(a[r][c]));
        l = lcm(l, denominator(b[r]));
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = numerator(a[r][c]) * (l / denominator(a[r][c]));
        m[r][n] = numerator(b[r]) * (l / denominator(b[r]));
    }

    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) throw NotInvertibleError("solve_exact: singular system");
        if (piv != k) std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if (m[n - 1][n - 1] == 0) throw NotInvertibleError("solve_exact: singular system");

    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(m[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
        x[ii] = acc / Rational(m[ii][ii]);
    }
    return x;
}

}  // namespace specstats

#pragma once

#include "specstats/rational.hpp"

#include <vector>

namespace specstats {

// Solve A x = b exactly over the rationals. Rows are scaled to integers and
// eliminated with fraction-free (Bareiss) pivoting, then back-substituted.
// Throws NotInvertibleError when A is singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace specstats

#include "specstats/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace specstats;

TEST_CASE("identical (seed, stream) reproduces the sequence exactly") {
    RngStream a(12345, 7), b(12345, 7);
    for (int k = 0; k < 1000; ++k) CHECK(a.next_u64() == b.next_u64());
    RngStream c(12345, 7), d(12345, 7);
    for (int k = 0; k < 100; ++k) {
        CHECK(c.next_double() == d.next_double());
        CHECK(c.next_gaussian() == d.next_gaussian());
    }
}

TEST_CASE("distinct streams and seeds differ") {
    RngStream a(1, 0), b(1, 1), c(2, 0);
    bool any_ab = false, any_ac = false;
    for (int k = 0; k < 16; ++k) {
        const auto va = a.next_u64();
        any_ab = any_ab || va != b.next_u64();
        any_ac = any_ac || va != c.next_u64();
    }
    CHECK(any_ab);
    CHECK(any_ac);
}

TEST_CASE("interleaving across independent streams does not perturb either") {
    RngStream alone(99, 3);
    std::vector<std::uint64_t> reference;
    for (int k = 0; k < 64; ++k) reference.push_back(alone.next_u64());

    RngStream s(99, 3), other(99, 4);
    for (int k = 0; k < 64; ++k) {
        if (k % 3 == 0) other.next_u64();
        CHECK(s.next_u64() == reference[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("uniform and bounded draws stay in range") {
    RngStream rng(5, 0);
    for (int k = 0; k < 10000; ++k) {
        const double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(rng.next_below(7) < 7);
    }
    CHECK_THROWS_AS(rng.next_below(0), std::invalid_argument);
}

TEST_CASE("gaussian moments within 5 standard errors") {
    RngStream rng(777, 0);
    const int n = 100000;
    double sum = 0, sumsq = 0;
    for (int k = 0; k < n; ++k) {
        const double g = rng.next_gaussian();
        sum += g;
        sumsq += g * g;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean) < 5.0 / std::sqrt(static_cast<double>(n)));
    // var(g^2) = 2 for a standard normal
    CHECK(std::abs(var - 1.0) < 5.0 * std::sqrt(2.0 / n));
}

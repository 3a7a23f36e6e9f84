#include "specstats/partitions.hpp"

#include "specstats/errors.hpp"
#include "specstats/set_partitions.hpp"

#include <doctest.h>

using namespace specstats;

TEST_CASE("enumerate_partitions: counts and documented order") {
    CHECK(enumerate_partitions(1) == std::vector<IntegerPartition>{IntegerPartition{1}});
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(6).size() == 11);
    CHECK(enumerate_partitions(8).size() == 22);

    // reverse-lexicographic: (i) first, (1^i) last
    const auto p4 = enumerate_partitions(4);
    CHECK(p4[0] == IntegerPartition{4});
    CHECK(p4[1] == IntegerPartition{3, 1});
    CHECK(p4[2] == IntegerPartition{2, 2});
    CHECK(p4[3] == IntegerPartition{2, 1, 1});
    CHECK(p4[4] == IntegerPartition{1, 1, 1, 1});

    CHECK_THROWS_AS(enumerate_partitions(9), CapacityError);
    CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
}

TEST_CASE("partition invariants") {
    const IntegerPartition lam{3, 1, 1};
    CHECK(lam.weight() == 5);
    CHECK(lam.length() == 3);
    const auto r = lam.multiplicities();
    CHECK(r[1] == 2);
    CHECK(r[3] == 1);
    int weight = 0, len = 0;
    for (int j = 1; j <= 5; ++j) {
        weight += j * r[static_cast<std::size_t>(j)];
        len += r[static_cast<std::size_t>(j)];
    }
    CHECK(weight == 5);
    CHECK(len == 3);
    CHECK_THROWS_AS(IntegerPartition({0, 1}), std::invalid_argument);
}

TEST_CASE("coeff_s and coeff_d on known classes") {
    CHECK(coeff_s(IntegerPartition{1, 1}) == 1);
    CHECK(coeff_s(IntegerPartition{2}) == 1);
    CHECK(coeff_s(IntegerPartition{3}) == 2);
    CHECK(coeff_d(IntegerPartition{1, 1}) == 1);
    CHECK(coeff_d(IntegerPartition{2, 1}) == 3);
    CHECK(coeff_d(IntegerPartition{3}) == 1);
}

TEST_CASE("sum of s_lambda over classes is i!, and d * prefactor = s") {
    for (int i = 1; i <= 8; ++i) {
        Int total = 0;
        for (const auto& lam : enumerate_partitions(i)) {
            total += coeff_s(lam);
            CHECK(coeff_d(lam) * Rational(polykay_prefactor(lam)) == Rational(coeff_s(lam)));
        }
        CHECK(total == int_factorial(i));
    }
}

TEST_CASE("d_lambda counts the set partitions of that class") {
    for (int i = 1; i <= 6; ++i) {
        std::map<std::vector<int>, int> counts;
        for (const auto& p : enumerate_set_partitions(i)) ++counts[p.shape().parts()];
        for (const auto& lam : enumerate_partitions(i))
            CHECK(coeff_d(lam) == counts[lam.parts()]);
    }
}

#include "specstats/spectral.hpp"

#include "specstats/classical.hpp"
#include "specstats/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace specstats;

namespace {

// Printed power-sum forms of the transformed generalized polykays (sample
// size m), used as independent verification vectors. The l_(2^2) denominator
// is read with (m^2-1); l_(1,3) uses the corrected prefactor, with the
// misprinted variant checked separately.
Rational l_printed(const IntegerPartition& lam, const std::vector<Rational>& x) {
    const auto p = power_sums(x, 4);
    const Rational m(p.n);
    const Rational S1 = p.sum(1), S2 = p.sum(2);
    const Rational S3 = lam.weight() >= 3 ? p.sum(3) : Rational(0);
    const Rational S4 = lam.weight() >= 4 ? p.sum(4) : Rational(0);
    if (lam == IntegerPartition{2, 1})
        return ((m + 1) * S1 * S2 - S1 * S1 * S1 - m * S3) /
               (m * (m - 1) * (m + 1) * (m - 2));
    if (lam == IntegerPartition{2, 1, 1})
        return (2 * m * S4 + (m + 3) * S1 * S1 * S2 - (2 * m + 2) * S1 * S3 - m * S2 * S2 -
                S1 * S1 * S1 * S1) /
               (m * (m - 1) * (m + 1) * (m - 2) * (m - 3));
    if (lam == IntegerPartition{2, 2})
        return (S1 * S1 * S1 * S1 + (m * m - 3 * m + 3) * S2 * S2 + (4 * m - 4) * S1 * S3 -
                2 * m * S1 * S1 * S2 + (m - m * m) * S4) /
               (m * m * (m * m - 1) * (m - 2) * (m - 3));
    if (lam == IntegerPartition{3, 1})
        return (-S4 * m * (m * m + 1) + S1 * S3 * (m * m * m + m * m + 4) +
                S2 * S2 * (2 * m * m - 3) - m * S1 * S1 * S2 * (3 * m + 1) +
                S1 * S1 * S1 * S1 * (2 * m - 1)) /
               (m * m * (m * m - 1) * (m * m - 4) * (m - 3));
    throw std::invalid_argument("no printed l form for " + lam.to_string());
}

}  // namespace

TEST_CASE("mu_of_spectrum") {
    const std::vector<Rational> x{1, 2, 3};
    const auto p = power_sums(x, 3);
    const auto mu2 = mu_of_spectrum(p, 2);
    CHECK(mu2.at(IntegerPartition{1, 1}) == 36);  // S_1^2 = (Tr Y)^2
    CHECK(mu2.at(IntegerPartition{2}) == 14);     // S_2
    const auto mu1 = mu_of_spectrum(p, 1);
    CHECK(mu1.at(IntegerPartition{1}) == 6);
    CHECK_THROWS_AS(mu_of_spectrum(power_sums(x, 1), 2), std::invalid_argument);

    const std::vector<Rational> c(4, Rational(3));
    const auto pc = power_sums(c, 2);
    const auto muc = mu_of_spectrum(pc, 2);
    CHECK(muc.at(IntegerPartition{2}) == 4 * 9);
    CHECK(muc.at(IntegerPartition{1, 1}) == 12 * 12);
}

TEST_CASE("spectral k-statistics: worked examples on (1,2,3)") {
    const std::vector<Rational> x{1, 2, 3};
    CHECK(spectral_kstat(IntegerPartition{1}, x) == 2);
    CHECK(spectral_kstat(IntegerPartition{2}, x) == Rational(1, 4));
    CHECK(spectral_kstat(IntegerPartition{1, 1}, x) == Rational(47, 12));
    CHECK(spectral_kstat(IntegerPartition{3}, x) == 0);
}

TEST_CASE("closed-form table: worked examples") {
    const std::vector<Rational> x{1, 2, 3};
    CHECK(closed_form_kstat(IntegerPartition{1, 1}, power_sums(x, 2)) == Rational(47, 12));
    const std::vector<Rational> x2{1, 2};
    CHECK(closed_form_kstat(IntegerPartition{2}, power_sums(x2, 2)) == Rational(1, 6));
    const std::vector<Rational> c(6, Rational(5, 3));
    CHECK(closed_form_kstat(IntegerPartition{4}, power_sums(c, 4)) == 0);
}

TEST_CASE("algorithm reproduces the closed forms exactly, n = 5..12") {
    std::mt19937_64 rng(31);
    for (int n = 5; n <= 12; ++n) {
        const auto x = testutil::random_rational_vector(rng, n, 9, 5);
        const auto p = power_sums(x, 4);
        for (int i = 1; i <= 4; ++i)
            for (const auto& lam : enumerate_partitions(i))
                CHECK(spectral_kstat(lam, x) == closed_form_kstat(lam, p));
    }
}

TEST_CASE("coefficient vectors: algorithm equals the closed-form table") {
    for (int n : {5, 8, 11})
        for (int i = 1; i <= 4; ++i)
            for (const auto& lam : enumerate_partitions(i))
                CHECK(kstat_powersum_coeffs(lam, n) == closed_form_coeffs(lam, n));
}

TEST_CASE("documented misprints: K_(4) denominator and K_(1^2,2) sign") {
    for (int n : {5, 9}) {
        // the printed variant of K_(4) is the algorithmic value divided by n
        const auto alg4 = kstat_powersum_coeffs(IntegerPartition{4}, n);
        const auto printed4 = printed_variant_coeffs(IntegerPartition{4}, n);
        CHECK(alg4 != printed4);
        for (const auto& [mono, coef] : alg4)
            CHECK(coef == printed4.at(mono) * n);

        // the printed variant of K_(1^2,2) flips only the S_2^2 coefficient
        const auto alg = kstat_powersum_coeffs(IntegerPartition{2, 1, 1}, n);
        auto printed = printed_variant_coeffs(IntegerPartition{2, 1, 1}, n);
        CHECK(alg != printed);
        printed[IntegerPartition{2, 2}] = -printed[IntegerPartition{2, 2}];
        CHECK(alg == printed);
    }
    // every other row agrees with its printed form
    for (int n : {5, 9})
        for (int i = 1; i <= 4; ++i)
            for (const auto& lam : enumerate_partitions(i)) {
                if (lam == IntegerPartition{4} || lam == IntegerPartition{2, 1, 1}) continue;
                CHECK(kstat_powersum_coeffs(lam, n) == printed_variant_coeffs(lam, n));
            }
}

TEST_CASE("documented misprint: the K_(1^2) = k_(1^2)/(n+1) annotation") {
    // x = (1,2): the power-sum form gives 13/6 while k_(1^2)/(n+1) = 2/3;
    // the consistent annotation is (n k_(1)^2 + k_(1^2))/(n+1).
    const std::vector<Rational> x{1, 2};
    const Rational n(2);
    const Rational alg = spectral_kstat(IntegerPartition{1, 1}, x);
    CHECK(alg == Rational(13, 6));
    const Rational k11 = k_statistic(IntegerPartition{1, 1}, x);
    const Rational k1 = k_statistic(IntegerPartition{1}, x);
    CHECK(alg != k11 / (n + 1));
    CHECK(k11 / (n + 1) == Rational(2, 3));
    CHECK(alg == (n * k1 * k1 + k11) / (n + 1));

    // the K_(2) annotation, by contrast, is exact
    std::mt19937_64 rng(32);
    for (int nn : {4, 7}) {
        const auto y = testutil::random_rational_vector(rng, nn);
        CHECK(spectral_kstat(IntegerPartition{2}, y) ==
              k_statistic(IntegerPartition{2}, y) / (Rational(nn) + 1));
    }
}

TEST_CASE("degree guards") {
    const std::vector<Rational> x{1, 2, 3};
    CHECK_THROWS_AS(spectral_kstat(IntegerPartition{4}, x), DegreeExceedsSampleError);
    const std::vector<Rational> big{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK_THROWS_AS(spectral_kstat(IntegerPartition{7}, big), CapacityError);
}

TEST_CASE("generalized polykays: Moebius sum against the kappa tables") {
    const std::vector<Rational> x{1, 2, 3};
    CHECK(generalized_polykay_l(IntegerPartition{1, 1}, x) == Rational(11, 3));
    CHECK(generalized_polykay_l(IntegerPartition{1, 1}, x) ==
          spectral_kappa(IntegerPartition{1, 1}, x) - spectral_kappa(IntegerPartition{2}, x));

    std::mt19937_64 rng(33);
    const auto y = testutil::random_rational_vector(rng, 5, 9, 4);
    auto kap = [&](std::initializer_list<int> parts) {
        return spectral_kappa(IntegerPartition(parts), y);
    };
    // single-block classes: l_(i) = kappa_(i)
    for (int i = 1; i <= 4; ++i)
        CHECK(generalized_polykay_l(IntegerPartition{i}, y) ==
              spectral_kappa(IntegerPartition{i}, y));
    CHECK(generalized_polykay_l(IntegerPartition{2, 1}, y) == kap({2, 1}) - kap({3}));
    CHECK(generalized_polykay_l(IntegerPartition{1, 1, 1}, y) ==
          kap({1, 1, 1}) - 3 * kap({2, 1}) + 2 * kap({3}));
    CHECK(generalized_polykay_l(IntegerPartition{3, 1}, y) == kap({3, 1}) - kap({4}));
    CHECK(generalized_polykay_l(IntegerPartition{2, 2}, y) == kap({2, 2}) - kap({4}));
    CHECK(generalized_polykay_l(IntegerPartition{2, 1, 1}, y) ==
          kap({2, 1, 1}) - 2 * kap({3, 1}) - kap({2, 2}) + 2 * kap({4}));
    CHECK(generalized_polykay_l(IntegerPartition{1, 1, 1, 1}, y) ==
          kap({1, 1, 1, 1}) - 6 * kap({2, 1, 1}) + 8 * kap({3, 1}) + 3 * kap({2, 2}) -
              6 * kap({4}));
}

TEST_CASE("l power-sum forms (printed, with documented corrections)") {
    std::mt19937_64 rng(34);
    for (int n : {6, 8}) {
        const auto x = testutil::random_rational_vector(rng, n, 9, 4);
        for (auto parts : {std::vector<int>{2, 1}, std::vector<int>{2, 1, 1},
                           std::vector<int>{2, 2}, std::vector<int>{3, 1}}) {
            const IntegerPartition lam(parts);
            CHECK(generalized_polykay_l(lam, x) == l_printed(lam, x));
        }
        // the misprinted l_(1,3) variant: a spurious factor 2 and a missing
        // (m-3) in the denominator
        const Rational misprinted =
            l_printed(IntegerPartition{3, 1}, x) * 2 * (Rational(n) - 3);
        CHECK(generalized_polykay_l(IntegerPartition{3, 1}, x) != misprinted);
    }
}

TEST_CASE("l_(1^r) equals the classical polykay k_(1^r), r <= 4") {
    std::mt19937_64 rng(35);
    for (int n : {5, 6}) {
        const auto x = testutil::random_rational_vector(rng, n, 9, 4);
        for (int r = 1; r <= 4; ++r) {
            const IntegerPartition lam(std::vector<int>(static_cast<std::size_t>(r), 1));
            CHECK(generalized_polykay_l(lam, x) == k_statistic(lam, x));
        }
    }
}

TEST_CASE("normalized spectral statistics: scaling factor m^{i-l}") {
    std::mt19937_64 rng(36);
    const auto x3 = testutil::random_rational_vector(rng, 3);
    CHECK(normalized_spectral(IntegerPartition{1}, x3, SpectralKind::kstat) ==
          spectral_kappa(IntegerPartition{1}, x3));  // factor m^0 = 1
    CHECK(normalized_spectral(IntegerPartition{2}, x3, SpectralKind::kstat) ==
          3 * spectral_kappa(IntegerPartition{2}, x3));  // factor m^1
    const auto x6 = testutil::random_rational_vector(rng, 6);
    CHECK(normalized_spectral(IntegerPartition{2, 2}, x6, SpectralKind::polykay) ==
          36 * generalized_polykay_l(IntegerPartition{2, 2}, x6));  // factor m^2
}

TEST_CASE("spectral invariants: symmetry, homogeneity, translation") {
    std::mt19937_64 rng(37);
    auto x = testutil::random_rational_vector(rng, 6, 9, 4);
    const Rational a(5, 3);
    for (int i = 1; i <= 4; ++i)
        for (const auto& lam : enumerate_partitions(i)) {
            const Rational base = spectral_kstat(lam, x);
            auto shuffled = x;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(spectral_kstat(lam, shuffled) == base);
            auto scaled = x;
            for (auto& v : scaled) v *= a;
            CHECK(spectral_kstat(lam, scaled) == rational_pow(a, lam.weight()) * base);
        }
    // K_(r) for r in {2,3,4} is invariant under centering
    Rational mean(0);
    for (const auto& v : x) mean += v;
    mean /= static_cast<int>(x.size());
    auto centered = x;
    for (auto& v : centered) v -= mean;
    for (int r = 2; r <= 4; ++r)
        CHECK(spectral_kstat(IntegerPartition{r}, centered) ==
              spectral_kstat(IntegerPartition{r}, x));
}

TEST_CASE("zero-mean K_(4) is proportional to n(n^2+1)S_4 - (2n^2-3)S_2^2") {
    std::mt19937_64 rng(38);
    const int n = 7;
    std::vector<Rational> ratio_seen;
    for (int trial = 0; trial < 4; ++trial) {
        auto x = testutil::random_rational_vector(rng, n - 1, 9, 4);
        Rational s(0);
        for (const auto& v : x) s += v;
        x.push_back(-s);
        const auto p = power_sums(x, 4);
        const Rational N(n);
        const Rational combo =
            N * (N * N + 1) * p.sum(4) - (2 * N * N - 3) * p.sum(2) * p.sum(2);
        if (combo == 0) continue;
        ratio_seen.push_back(spectral_kstat(IntegerPartition{4}, x) / combo);
    }
    REQUIRE(ratio_seen.size() >= 2);
    for (const auto& r : ratio_seen) CHECK(r == ratio_seen.front());
}

TEST_CASE("constant spectra: every statistic with all parts >= 2 vanishes exactly") {
    const std::vector<Rational> c(6, Rational(7, 3));
    for (int i = 2; i <= 4; ++i)
        for (const auto& lam : enumerate_partitions(i)) {
            if (lam.parts().back() < 2) continue;
            CHECK(spectral_kstat(lam, c) == 0);
            CHECK(generalized_polykay_l(lam, c) == 0);
        }
}

TEST_CASE("trace moments from scaled cumulants and back") {
    std::mt19937_64 rng(39);
    const int m = 5;
    std::vector<Rational> c;
    for (int k = 0; k < 5; ++k) c.push_back(testutil::random_rational(rng, 6, 4));

    // i = 1 and i = 2 against the hand expansion
    CHECK(trace_moments_from_scaled_cumulants(c, m, 1) == m * c[0]);
    CHECK(trace_moments_from_scaled_cumulants(c, m, 2) ==
          m * c[1] + Rational(m) * m * c[0] * c[0]);

    // round trip through the triangular inversion, degrees <= 5
    std::vector<Rational> mom;
    for (int i = 1; i <= 5; ++i) mom.push_back(trace_moments_from_scaled_cumulants(c, m, i));
    const auto back = scaled_cumulants_from_trace_moments(mom, m);
    REQUIRE(back.size() == c.size());
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(back[k] == c[k]);
}

TEST_CASE("cumulant products from trace-moment products") {
    std::mt19937_64 rng(40);
    const int m = 4;
    std::vector<Rational> c;
    for (int k = 0; k < 4; ++k) c.push_back(testutil::random_rational(rng, 6, 4));
    std::vector<Rational> mom;
    for (int i = 1; i <= 4; ++i) mom.push_back(trace_moments_from_scaled_cumulants(c, m, i));
    const auto g = [&](const IntegerPartition& eta) {
        Rational prod(1);
        for (int part : eta.parts()) prod *= mom[static_cast<std::size_t>(part) - 1];
        return prod;
    };

    // lambda = (1): single term g_(1)/m
    CHECK(cumulant_products_from_trace_moments(IntegerPartition{1}, g, m) == mom[0] / m);
    // lambda = (2): (g_(2) - g_(1,1))/m, cross-checked against the inversion
    CHECK(cumulant_products_from_trace_moments(IntegerPartition{2}, g, m) ==
          (mom[1] - mom[0] * mom[0]) / m);
    // every class of degree <= 4 recovers the product of scaled cumulants
    for (int i = 1; i <= 4; ++i)
        for (const auto& lam : enumerate_partitions(i)) {
            Rational expect(1);
            for (int part : lam.parts()) expect *= c[static_cast<std::size_t>(part) - 1];
            CHECK(cumulant_products_from_trace_moments(lam, g, m) == expect);
        }
}

TEST_CASE("conditional moment closed forms") {
    const std::vector<Rational> x{1, 2, 3, 4};
    // m = n: every listed moment vanishes
    for (auto which : {ConditionalMoment::var_k1, ConditionalMoment::cov_k1_k2,
                       ConditionalMoment::var_k2})
        CHECK(conditional_moment_formula(which, x, 4) == 0);

    // var(K_(1)) at m = 2: K_(2)(x) (1/2 - 1/4)
    CHECK(conditional_moment_formula(ConditionalMoment::var_k1, x, 2) ==
          spectral_kstat(IntegerPartition{2}, x) * Rational(1, 4));

    // the var(K_(2)) form uses kappa-tilde on the right: K_(4)/6 and K_(2,2)
    const std::vector<Rational> y{0, 0, 0, 1, 5, 9};
    const int m = 3, n = 6;
    const Rational w1 = Rational(1, m * m - 1) - Rational(1, n * n - 1);
    const Rational w2 =
        Rational((n - m) * (2 * m * m * n * n - 3 * n * n - 3 * m * m - m * n + 3)) /
        Rational(n * m * (m * m - 1) * (n * n - 1));
    CHECK(conditional_moment_formula(ConditionalMoment::var_k2, y, m) ==
          2 * spectral_kstat(IntegerPartition{2, 2}, y) * w1 +
              2 * spectral_kstat(IntegerPartition{4}, y) / 6 * w2);
    // and cov uses 2 kappa_(3) = K_(3)
    CHECK(conditional_moment_formula(ConditionalMoment::cov_k1_k2, y, m) ==
          spectral_kstat(IntegerPartition{3}, y) * (Rational(1, m) - Rational(1, n)));

    CHECK_THROWS_AS(conditional_moment_formula(ConditionalMoment::var_k1, x, 5),
                    std::invalid_argument);
}

TEST_CASE("known print discrepancies are documented") {
    CHECK(known_print_discrepancies().size() >= 7);
}

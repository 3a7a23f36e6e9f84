#pragma once

#include "specstats/errors.hpp"
#include "specstats/partitions.hpp"
#include "specstats/power_sums.hpp"
#include "specstats/set_partitions.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace specstats {

namespace detail {
// Augmented symmetric functions expanded over power sums: merging the
// indices of S_{lambda_1} ... S_{lambda_l} along a set partition of the index
// positions and Moebius-inverting on that lattice gives
//   a_lambda = sum_{pi in Pi_l} prod_{B in pi} (-1)^{|B|-1}(|B|-1)! S_{sum_{j in B} lambda_j}.
// Cached per length: list of (integer coefficient, merged exponents).
struct AugTerm {
    long long coefficient;
    std::vector<std::vector<int>> merged_blocks;  // index positions per block
};
const std::vector<AugTerm>& augmented_terms(int length);

// k-statistics and polykays of degree <= 4 as integer combinations of the
// normalized augmented symmetric functions.
struct KTerm {
    int coefficient;
    IntegerPartition mu;
};
const std::vector<KTerm>& k_statistic_terms(const IntegerPartition& lambda);
}  // namespace detail

// Unnormalized augmented symmetric function a_lambda(x): the sum of
// x_i^{lambda_1} x_j^{lambda_2} ... over distinct index tuples.
template <class T>
T augmented(const IntegerPartition& lambda, const std::vector<T>& x) {
    const int l = lambda.length();
    if (l == 0) return T(1);
    if (l > static_cast<int>(x.size()))
        throw std::invalid_argument("augmented: partition longer than the sample");
    const auto p = power_sums(x, lambda.weight());
    T out(0);
    for (const auto& term : detail::augmented_terms(l)) {
        T prod(term.coefficient);
        for (const auto& block : term.merged_blocks) {
            int e = 0;
            for (int pos : block) e += lambda.parts()[static_cast<std::size_t>(pos)];
            prod *= p.sum(e);
        }
        out += prod;
    }
    return out;
}

// a_lambda / (n)_{l(lambda)}, the inherited-on-the-average normalization.
template <class T>
T augmented_normalized(const IntegerPartition& lambda, const std::vector<T>& x) {
    T den(1);
    const int n = static_cast<int>(x.size());
    for (int j = 0; j < lambda.length(); ++j) den *= T(n - j);
    return augmented(lambda, x) / den;
}

// Fisher k-statistics (single part) and Tukey polykays (several parts),
// degree <= 4. k_(2) is the sample variance with divisor n-1.
template <class T>
T k_statistic(const IntegerPartition& lambda, const std::vector<T>& x) {
    if (lambda.weight() > 4)
        throw CapacityError("k_statistic: degree " + std::to_string(lambda.weight()) +
                            " not supported (<= 4)");
    if (static_cast<int>(x.size()) < lambda.weight())
        throw std::invalid_argument("k_statistic: sample smaller than the degree");
    T out(0);
    for (const auto& term : detail::k_statistic_terms(lambda))
        out += T(term.coefficient) * augmented_normalized(term.mu, x);
    return out;
}

// Left minus right of the order-<=4 identities expressing polykays through
// k-statistic products, with the sample size in place of the population size.
// Exactly zero on any sample. Identity ids: "1^2", "1,2", "1^3", "1,3",
// "2^2", "1^2,2", "1^4".
//
// Two rows of the commonly printed version of this table carry misprints in
// the k_(4) coefficient; the identities here use the correct coefficients
// -(n-1)/(n(n+1)) for "2^2" and -6/(n^2(n+1)) for "1^4" (see the classical
// test suite, which documents the misprinted variants failing).
template <class T>
T tukey_identity_residual(std::string_view id, const std::vector<T>& x) {
    const T n(static_cast<int>(x.size()));
    auto k = [&](std::initializer_list<int> parts) {
        return k_statistic(IntegerPartition(parts), x);
    };
    if (id == "1^2") return k({1, 1}) - (k({1}) * k({1}) - k({2}) / n);
    if (id == "1,2") return k({2, 1}) - (k({1}) * k({2}) - k({3}) / n);
    if (id == "1^3")
        return k({1, 1, 1}) -
               (k({1}) * k({1}) * k({1}) - T(3) * k({2}) * k({1}) / n +
                T(2) * k({3}) / (n * n));
    if (id == "1,3") return k({3, 1}) - (k({1}) * k({3}) - k({4}) / n);
    if (id == "2^2")
        return k({2, 2}) - ((n - T(1)) / (n + T(1)) * k({2}) * k({2}) -
                            (n - T(1)) / (n * (n + T(1))) * k({4}));
    if (id == "1^2,2")
        return k({2, 1, 1}) -
               (k({2}) * k({1}) * k({1}) - T(2) * k({3}) * k({1}) / n -
                (n - T(1)) / (n * (n + T(1))) * k({2}) * k({2}) +
                T(2) * k({4}) / (n * (n + T(1))));
    if (id == "1^4")
        return k({1, 1, 1, 1}) -
               (k({1}) * k({1}) * k({1}) * k({1}) -
                T(6) * k({2}) * k({1}) * k({1}) / n +
                T(8) * k({3}) * k({1}) / (n * n) +
                T(3) * (n - T(1)) / (n * n * (n + T(1))) * k({2}) * k({2}) -
                T(6) / (n * n * (n + T(1))) * k({4}));
    throw std::invalid_argument("tukey_identity_residual: unknown identity id '" +
                                std::string(id) + "'");
}

const std::vector<std::string>& tukey_identity_ids();

}  // namespace specstats

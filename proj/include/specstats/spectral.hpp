#pragma once

#include "specstats/class_algebra.hpp"
#include "specstats/classical.hpp"
#include "specstats/errors.hpp"
#include "specstats/partitions.hpp"
#include "specstats/power_sums.hpp"

#include <map>
#include <string>
#include <type_traits>
#include <vector>

namespace specstats {

template <class T>
T from_rational(const Rational& q);
template <>
inline Rational from_rational<Rational>(const Rational& q) {
    return q;
}
template <>
inline double from_rational<double>(const Rational& q) {
    return to_double(q);
}

// mu(Y): value prod_j S_{lambda_j} on class lambda; at the identity class
// this is S_1^i = (Tr Y)^i.
template <class T>
ClassFunction<T> mu_of_spectrum(const PowerSums<T>& p, int i) {
    if (p.max_degree() < i)
        throw std::invalid_argument("mu_of_spectrum: power sums up to S_" + std::to_string(i) +
                                    " required");
    const auto classes = enumerate_partitions(i);
    std::vector<T> values;
    values.reserve(classes.size());
    for (const auto& lam : classes) {
        T v(1);
        for (int part : lam.parts()) v *= p.sum(part);
        values.push_back(v);
    }
    return ClassFunction<T>(i, std::move(values));
}

// kappa-tilde on every class of S_i for the spectrum x of size m:
// the convolution mu(I_m)^{(-1)} * mu(Y), evaluated exactly in T.
template <class T>
ClassFunction<T> spectral_kappa_all(int i, const std::vector<T>& x,
                                    int cap = kSpectralDegreeCap) {
    if (i < 1) throw std::invalid_argument("spectral_kappa_all: degree must be >= 1");
    if (i > cap)
        throw CapacityError("spectral_kappa_all: degree " + std::to_string(i) +
                            " exceeds cap " + std::to_string(cap));
    const int m = static_cast<int>(x.size());
    if (i > m)
        throw DegreeExceedsSampleError("degree exceeds sample size (" + std::to_string(i) +
                                       " > " + std::to_string(m) + ")");
    const auto p = power_sums(x, i);
    const auto mu_y = mu_of_spectrum(p, i);
    return convolve(convert<T, Rational>(inverse_mu_identity(m, i)), mu_y);
}

// kappa-tilde_lambda(x).
template <class T>
T spectral_kappa(const IntegerPartition& lambda, const std::vector<T>& x) {
    return spectral_kappa_all<T>(lambda.weight(), x).at(lambda);
}

// Spectral k-statistic / matricial polykay:
// K_lambda = (1!)^{r_2}(2!)^{r_3}... * kappa-tilde_lambda.
template <class T>
T spectral_kstat(const IntegerPartition& lambda, const std::vector<T>& x) {
    return from_rational<T>(Rational(polykay_prefactor(lambda))) *
           spectral_kappa(lambda, x);
}

// Moebius coefficients of l_lambda over kappa classes:
// l_pi = sum_{tau >= pi} m(pi,tau) kappa-tilde(class tau) with pi the
// canonical set partition of class lambda; grouped by class(tau).
const std::map<IntegerPartition, Int>& l_moebius_coeffs(const IntegerPartition& lambda);

// Transformed generalized spectral polykay l_lambda(x).
template <class T>
T generalized_polykay_l(const IntegerPartition& lambda, const std::vector<T>& x) {
    const auto kappas = spectral_kappa_all<T>(lambda.weight(), x);
    T out(0);
    for (const auto& [cls, coef] : l_moebius_coeffs(lambda))
        out += from_rational<T>(Rational(coef)) * kappas.at(cls);
    return out;
}

enum class SpectralKind { kstat, polykay };

// m^{i - l(lambda)} times the raw statistic (kappa-tilde_lambda or l_lambda).
template <class T>
T normalized_spectral(const IntegerPartition& lambda, const std::vector<T>& x,
                      SpectralKind kind) {
    const int m = static_cast<int>(x.size());
    const int e = lambda.weight() - lambda.length();
    const T raw = kind == SpectralKind::kstat ? spectral_kappa(lambda, x)
                                              : generalized_polykay_l(lambda, x);
    return from_rational<T>(Rational(int_pow(Int(m), e))) * raw;
}

// Exact power-sum expansions at sample size m, keyed by the monomial class:
// the coefficient of S_{mu_1} S_{mu_2} ... in the statistic.
std::map<IntegerPartition, Rational> kappa_powersum_coeffs(const IntegerPartition& lambda,
                                                           int m);
std::map<IntegerPartition, Rational> kstat_powersum_coeffs(const IntegerPartition& lambda,
                                                           int m);
std::map<IntegerPartition, Rational> l_powersum_coeffs(const IntegerPartition& lambda, int m);

// Closed-form verification table for the eleven degree-<=4 spectral
// k-statistics, as power-sum coefficient vectors at sample size n. Two rows
// of the commonly printed version of this table are misprinted (a factor n
// in the K_(4) denominator and the sign of the S_2^2 term of K_(1^2,2));
// this table carries the corrected forms, which match the convolution
// algorithm identically. printed_variant_coeffs preserves the misprinted
// rows so the discrepancy can be demonstrated.
std::map<IntegerPartition, Rational> closed_form_coeffs(const IntegerPartition& lambda, int n);
std::map<IntegerPartition, Rational> printed_variant_coeffs(const IntegerPartition& lambda,
                                                            int n);

// Evaluates the closed-form table; verification oracle for spectral_kstat.
template <class T>
T closed_form_kstat(const IntegerPartition& lambda, const PowerSums<T>& p) {
    if (lambda.weight() > 4)
        throw CapacityError("closed_form_kstat: degree > 4 has no closed-form row");
    T out(0);
    for (const auto& [mono, coef] : closed_form_coeffs(lambda, p.n)) {
        T prod = from_rational<T>(coef);
        for (int part : mono.parts()) prod *= p.sum(part);
        out += prod;
    }
    return out;
}

// E[(Tr Y)^i] = sum_{lambda |- i} d_lambda m^{l(lambda)} prod_j c_{lambda_j}
// from the scaled trace cumulants c_1..c_i.
template <class T>
T trace_moments_from_scaled_cumulants(const std::vector<T>& c, int m, int i) {
    if (static_cast<int>(c.size()) < i)
        throw std::invalid_argument("trace_moments_from_scaled_cumulants: c_1..c_i required");
    T out(0);
    for (const auto& lam : enumerate_partitions(i)) {
        T prod = from_rational<T>(coeff_d(lam) * Rational(int_pow(Int(m), lam.length())));
        for (int part : lam.parts()) prod *= c[static_cast<std::size_t>(part) - 1];
        out += prod;
    }
    return out;
}

// Inverse direction: scaled cumulants from trace moments M_1..M_d, by
// triangular back-substitution over degrees (d_{(i)} = 1 and the (i) term is
// the only one containing c_i).
template <class T>
std::vector<T> scaled_cumulants_from_trace_moments(const std::vector<T>& mom, int m) {
    std::vector<T> c;
    c.reserve(mom.size());
    for (int i = 1; i <= static_cast<int>(mom.size()); ++i) {
        T rest(0);
        for (const auto& lam : enumerate_partitions(i)) {
            if (lam.length() == 1) continue;
            T prod = from_rational<T>(coeff_d(lam) * Rational(int_pow(Int(m), lam.length())));
            for (int part : lam.parts()) prod *= c[static_cast<std::size_t>(part) - 1];
            rest += prod;
        }
        c.push_back((mom[static_cast<std::size_t>(i) - 1] - rest) / T(m));
    }
    return c;
}

// prod_j c_{lambda_j} expressed through products of trace moments:
//   sum over (eta_1 |- lambda_1, ..., eta_r |- lambda_r) of
//   prod_j [(-1)^{l(eta_j)-1} d_{eta_j} (l(eta_j)-1)! / m] * g(eta_1 + ... + eta_r),
// where the argument of g is the concatenation of the eta_j and g supplies the
// product of trace moments with those exponents.
template <class G,
          class T = std::remove_cvref_t<std::invoke_result_t<G, const IntegerPartition&>>>
T cumulant_products_from_trace_moments(const IntegerPartition& lambda, G&& g, int m) {
    const auto& parts = lambda.parts();
    std::vector<std::vector<IntegerPartition>> choices;
    choices.reserve(parts.size());
    for (int part : parts) choices.push_back(enumerate_partitions(part));

    T out(0);
    std::vector<std::size_t> idx(parts.size(), 0);
    while (true) {
        Rational weight(1);
        std::vector<int> merged;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const auto& eta = choices[j][idx[j]];
            const int l = eta.length();
            Rational w = coeff_d(eta) * Rational(int_factorial(l - 1), m);
            if (l % 2 == 0) w = -w;
            weight *= w;
            merged.insert(merged.end(), eta.parts().begin(), eta.parts().end());
        }
        out += from_rational<T>(weight) * g(IntegerPartition(std::move(merged)));

        std::size_t j = 0;
        for (; j < parts.size(); ++j) {
            if (++idx[j] < choices[j].size()) break;
            idx[j] = 0;
        }
        if (j == parts.size()) break;
    }
    return out;
}

enum class ConditionalMoment { var_k1, cov_k1_k2, var_k2 };

// Closed forms for the first conditional moments of spectral statistics of a
// size-m spectral sample from x (size n):
//   var(K_(1))        = kappa_(2)(x) (1/m - 1/n)
//   cov(K_(1),K_(2))  = 2 kappa_(3)(x) (1/m - 1/n)
//   var(K_(2))        = 2 kappa_(2,2)(x) (1/(m^2-1) - 1/(n^2-1))
//                     + 2 kappa_(4)(x) (n-m)(2m^2n^2-3n^2-3m^2-mn+3) / (nm(m^2-1)(n^2-1))
// in terms of the un-prefactored kappa-tilde values (for classes (2) and
// (2,2) these coincide with the K's). Derived and cross-checked by Monte
// Carlo in the test suite.
template <class T>
T conditional_moment_formula(ConditionalMoment which, const std::vector<T>& x, int m) {
    const int n = static_cast<int>(x.size());
    if (m < 1 || m > n)
        throw std::invalid_argument("conditional_moment_formula: need 1 <= m <= n");
    const Rational rm(m), rn(n);
    switch (which) {
        case ConditionalMoment::var_k1:
            return spectral_kappa(IntegerPartition{2}, x) *
                   from_rational<T>(Rational(1) / rm - Rational(1) / rn);
        case ConditionalMoment::cov_k1_k2:
            return T(2) * spectral_kappa(IntegerPartition{3}, x) *
                   from_rational<T>(Rational(1) / rm - Rational(1) / rn);
        case ConditionalMoment::var_k2: {
            const Rational w1 = Rational(1) / (rm * rm - 1) - Rational(1) / (rn * rn - 1);
            const Rational w2 =
                Rational((rn - rm) * (2 * rm * rm * rn * rn - 3 * rn * rn - 3 * rm * rm -
                                      rm * rn + 3)) /
                (rn * rm * (rm * rm - 1) * (rn * rn - 1));
            return T(2) * spectral_kappa(IntegerPartition{2, 2}, x) * from_rational<T>(w1) +
                   T(2) * spectral_kappa(IntegerPartition{4}, x) * from_rational<T>(w2);
        }
    }
    throw std::invalid_argument("conditional_moment_formula: unknown moment");
}

// Known discrepancies between the commonly printed closed-form tables and the
// algorithmic values; surfaced by the tables subcommand and pinned by tests.
struct PrintDiscrepancy {
    int degree;
    std::string id;
    std::string note;
};
const std::vector<PrintDiscrepancy>& known_print_discrepancies();

}  // namespace specstats

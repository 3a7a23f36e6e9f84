#include "specstats/spectral.hpp"

#include "specstats/set_partitions.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace specstats {

const std::map<IntegerPartition, Int>& l_moebius_coeffs(const IntegerPartition& lambda) {
    static std::mutex mu;
    static std::map<IntegerPartition, std::map<IntegerPartition, Int>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;

    const auto pi = SetPartition::of_shape(lambda);
    std::map<IntegerPartition, Int> out;
    for (const auto& tau : enumerate_set_partitions(lambda.weight())) {
        if (!refines(pi, tau)) continue;
        out[tau.shape()] += numerator(moebius(pi, tau));
    }
    return cache.emplace(lambda, std::move(out)).first->second;
}

std::map<IntegerPartition, Rational> kappa_powersum_coeffs(const IntegerPartition& lambda,
                                                           int m) {
    const int i = lambda.weight();
    if (i > kSpectralDegreeCap)
        throw CapacityError("kappa_powersum_coeffs: degree exceeds cap");
    if (i > m) throw DegreeExceedsSampleError("degree exceeds sample size");
    const auto& table = ClassConvolutionTable::of_degree(i);
    const auto& inv = inverse_mu_identity(m, i);
    const auto c = table.index_of(lambda);
    std::map<IntegerPartition, Rational> out;
    for (int b = 0; b < table.class_count(); ++b) {
        Rational acc(0);
        for (int a = 0; a < table.class_count(); ++a)
            if (auto cnt = table.count(a, b, static_cast<int>(c)))
                acc += Rational(cnt) * inv.values()[static_cast<std::size_t>(a)];
        if (acc != 0) out[table.classes()[static_cast<std::size_t>(b)]] = acc;
    }
    return out;
}

std::map<IntegerPartition, Rational> kstat_powersum_coeffs(const IntegerPartition& lambda,
                                                           int m) {
    auto out = kappa_powersum_coeffs(lambda, m);
    const Rational pref(polykay_prefactor(lambda));
    for (auto& [mono, coef] : out) coef *= pref;
    return out;
}

std::map<IntegerPartition, Rational> l_powersum_coeffs(const IntegerPartition& lambda, int m) {
    std::map<IntegerPartition, Rational> out;
    for (const auto& [cls, coef] : l_moebius_coeffs(lambda)) {
        const Rational c(coef);
        for (const auto& [mono, kc] : kappa_powersum_coeffs(cls, m)) {
            auto& slot = out[mono];
            slot += c * kc;
            if (slot == 0) out.erase(mono);
        }
    }
    return out;
}

namespace {

// One row of the closed-form table: numerator coefficients per S-monomial as
// polynomials in n, over a common denominator.
struct Row {
    std::vector<std::pair<IntegerPartition, Rational>> numerators;
    Rational denominator;
};

Row closed_form_row(const IntegerPartition& lambda, int n, bool printed_variant) {
    const Rational N(n);
    const Rational d2 = N * (N * N - 1);
    const Rational d3 = N * (N * N - 1) * (N * N - 4);
    const Rational q4 = (N * N - 1) * (N * N - 4) * (N * N - 9);
    const Rational d4 = N * N * q4;
    const Rational d4p = N * q4;

    const IntegerPartition p1{1}, p2{2}, p11{1, 1};
    const IntegerPartition p3{3}, p21{2, 1}, p111{1, 1, 1};
    const IntegerPartition p4{4}, p31{3, 1}, p22{2, 2}, p211{2, 1, 1}, p1111{1, 1, 1, 1};

    if (lambda == p1) return {{{p1, 1}}, N};
    if (lambda == p2) return {{{p2, N}, {p11, -1}}, d2};
    if (lambda == p11) return {{{p11, N}, {p2, -1}}, d2};
    if (lambda == p3) return {{{p111, 4}, {p21, -6 * N}, {p3, 2 * N * N}}, d3};
    if (lambda == p21) return {{{p3, -2 * N}, {p21, N * N + 2}, {p111, -N}}, d3};
    if (lambda == p111) return {{{p111, N * N - 2}, {p21, -3 * N}, {p3, 4}}, d3};
    if (lambda == p4) {
        // the commonly printed variant carries a spurious factor n in the
        // denominator; the algorithmic denominator is n(n^2-1)(n^2-4)(n^2-9)
        return {{{p4, 6 * N * (N * N + 1)},
                 {p31, -24 * (N * N + 1)},
                 {p22, 6 * (3 - 2 * N * N)},
                 {p211, 60 * N},
                 {p1111, -30}},
                printed_variant ? d4 : d4p};
    }
    if (lambda == p31) {
        return {{{p4, -6 * N * (N * N + 1)},
                 {p31, 2 * (N * N * N * N + 3 * N * N + 12)},
                 {p22, 2 * (6 * N * N - 9)},
                 {p211, -6 * N * (N * N + 1)},
                 {p1111, 2 * (2 * N * N - 3)}},
                d4};
    }
    if (lambda == p22) {
        return {{{p4, 2 * N * (3 - 2 * N * N)},
                 {p31, 4 * (4 * N * N - 6)},
                 {p22, N * N * N * N - 6 * N * N + 18},
                 {p211, -2 * N * (N * N + 6)},
                 {p1111, N * N + 6}},
                d4};
    }
    if (lambda == p211) {
        // the commonly printed variant has the S_2^2 coefficient with the
        // wrong sign (+(n^2+6)); the algorithmic coefficient is -(n^2+6)
        return {{{p4, 10 * N},
                 {p31, -4 * (N * N + 1)},
                 {p22, (printed_variant ? 1 : -1) * (N * N + 6)},
                 {p211, N * (N * N + 1)},
                 {p1111, 4 - N * N}},
                d4p};
    }
    if (lambda == p1111) {
        return {{{p4, -30 * N},
                 {p31, 4 * (4 * N * N - 6)},
                 {p22, 3 * N * N + 18},
                 {p211, 6 * N * (4 - N * N)},
                 {p1111, N * N * N * N - 8 * N * N + 6}},
                d4};
    }
    throw CapacityError("closed_form_coeffs: no closed-form row for " + lambda.to_string());
}

std::map<IntegerPartition, Rational> row_to_map(const Row& row) {
    std::map<IntegerPartition, Rational> out;
    for (const auto& [mono, num] : row.numerators) out[mono] = num / row.denominator;
    return out;
}

}  // namespace

std::map<IntegerPartition, Rational> closed_form_coeffs(const IntegerPartition& lambda, int n) {
    return row_to_map(closed_form_row(lambda, n, /*printed_variant=*/false));
}

std::map<IntegerPartition, Rational> printed_variant_coeffs(const IntegerPartition& lambda,
                                                            int n) {
    return row_to_map(closed_form_row(lambda, n, /*printed_variant=*/true));
}

const std::vector<PrintDiscrepancy>& known_print_discrepancies() {
    static const std::vector<PrintDiscrepancy> list = {
        {2, "K_(1^2) annotation",
         "the annotation K_(1^2) = k_(1^2)/(n+1) is inconsistent with the power-sum form "
         "(n S_1^2 - S_2)/(n(n^2-1)); the correct annotation is "
         "(n k_(1)^2 + k_(1^2))/(n+1). Counterexample x=(1,2): 13/6 vs 2/3."},
        {4, "K_(4) denominator",
         "the commonly printed denominator n^2(n^2-1)(n^2-4)(n^2-9) carries a spurious "
         "factor n; the algorithmic denominator is n(n^2-1)(n^2-4)(n^2-9). The printed "
         "variant also contradicts the m->infinity normalization m^3 kappa_(4) -> c_4."},
        {4, "K_(1^2,2) S_2^2 sign",
         "the commonly printed S_2^2 coefficient +(n^2+6) has the wrong sign; the "
         "algorithmic coefficient is -(n^2+6), as the printed l_(1^2,2) row confirms."},
        {4, "l_(2^2) denominator symbol",
         "the printed denominator m^2(n^2-1)(m-2)(m-3) mixes in a symbol n that has no "
         "referent in a function of the sample alone; read as (m^2-1) the row matches "
         "the Moebius sum exactly."},
        {4, "l_(1,3) prefactor",
         "the printed prefactor 2/(m^2(m^2-4)(m^2-1)) must be 1/(m^2(m^2-4)(m^2-1)(m-3)); "
         "the printed variant also has the wrong m->infinity scaling."},
        {4, "classical 2^2 product row",
         "in the order-<=4 table expressing polykays through k-statistic products, the "
         "k_(4) coefficient of the 2^2 row is -(n-1)/(n(n+1)), not -1/n."},
        {4, "classical 1^4 product row",
         "in the same table the k_(4) coefficient of the 1^4 row is -6/(n^2(n+1)), not "
         "-6n/(n+1) (the row must vanish term-by-term as n grows)."},
        {4, "conditional var/cov right-hand sides",
         "the printed closed forms for cov(K_(1),K_(2)) and var(K_(2)) are exact only "
         "with the un-prefactored kappa-tilde on the right (2 kappa_(3) = K_(3), "
         "kappa_(4) = K_(4)/6); Monte Carlo rejects the literal reading decisively."},
    };
    return list;
}

}  // namespace specstats

#include "specstats/class_algebra.hpp"

#include "specstats/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

namespace specstats {

namespace {

using Perm = std::vector<int>;  // 0-based images

IntegerPartition cycle_class(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> parts;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        int len = 0, j = s;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = p[static_cast<std::size_t>(j)];
            ++len;
        }
        parts.push_back(len);
    }
    return IntegerPartition(std::move(parts));
}

// Canonical representative: cycles filled with consecutive points in order.
Perm class_representative(const IntegerPartition& lambda) {
    const int n = lambda.weight();
    Perm p(static_cast<std::size_t>(n));
    int pos = 0;
    for (int part : lambda.parts()) {
        for (int k = 0; k < part; ++k)
            p[static_cast<std::size_t>(pos + k)] = pos + (k + 1) % part;
        pos += part;
    }
    return p;
}

Perm inverse_perm(const Perm& p) {
    Perm inv(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        inv[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
    return inv;
}

}  // namespace

ClassConvolutionTable::ClassConvolutionTable(int i)
    : degree_(i), classes_(enumerate_partitions(i)) {
    const auto p = classes_.size();
    counts_.assign(p * p * p, 0);

    std::map<std::vector<int>, int> class_index_by_parts;
    for (std::size_t k = 0; k < p; ++k) class_index_by_parts[classes_[k].parts()] = static_cast<int>(k);
    auto index_of_perm = [&](const Perm& perm) {
        return class_index_by_parts.at(cycle_class(perm).parts());
    };

    std::vector<Perm> reps;
    reps.reserve(p);
    for (const auto& lam : classes_) reps.push_back(class_representative(lam));

    Perm rho(static_cast<std::size_t>(i));
    std::iota(rho.begin(), rho.end(), 0);
    Perm omega(static_cast<std::size_t>(i));
    do {
        const int a = index_of_perm(rho);
        const Perm rho_inv = inverse_perm(rho);
        for (std::size_t c = 0; c < p; ++c) {
            // omega = rho^{-1} o sigma_0 so that rho o omega = sigma_0
            for (std::size_t k = 0; k < static_cast<std::size_t>(i); ++k)
                omega[k] = rho_inv[static_cast<std::size_t>(reps[c][k])];
            const int b = index_of_perm(omega);
            ++counts_[(static_cast<std::size_t>(a) * p + static_cast<std::size_t>(b)) * p + c];
        }
    } while (std::next_permutation(rho.begin(), rho.end()));
}

const ClassConvolutionTable& ClassConvolutionTable::of_degree(int i, int cap) {
    if (i < 1) throw std::invalid_argument("ClassConvolutionTable: degree must be >= 1");
    if (i > cap)
        throw CapacityError("ClassConvolutionTable: degree " + std::to_string(i) +
                            " exceeds cap " + std::to_string(cap) +
                            " (build cost is O(i! * p(i)))");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ClassConvolutionTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[i];
    if (!slot) slot = std::unique_ptr<ClassConvolutionTable>(new ClassConvolutionTable(i));
    return *slot;
}

std::size_t ClassConvolutionTable::index_of(const IntegerPartition& lambda) const {
    for (std::size_t k = 0; k < classes_.size(); ++k)
        if (classes_[k] == lambda) return k;
    throw std::invalid_argument("ClassConvolutionTable: unknown class " + lambda.to_string());
}

ClassFunction<Rational> mu_identity(int m, int i) {
    if (m < 1) throw std::invalid_argument("mu_identity: m must be >= 1");
    const auto classes = enumerate_partitions(i);
    std::vector<Rational> values;
    values.reserve(classes.size());
    for (const auto& lam : classes) values.emplace_back(int_pow(Int(m), lam.length()));
    return ClassFunction<Rational>(i, std::move(values));
}

ClassFunction<Rational> invert(const ClassFunction<Rational>& f) {
    const auto& table = ClassConvolutionTable::of_degree(f.degree());
    const auto p = static_cast<std::size_t>(table.class_count());
    // (f*g)(c) = sum_b [sum_a N(a,b,c) f(a)] g(b) = delta(c)
    std::vector<std::vector<Rational>> mat(p, std::vector<Rational>(p, Rational(0)));
    for (std::size_t c = 0; c < p; ++c)
        for (std::size_t b = 0; b < p; ++b) {
            Rational acc(0);
            for (std::size_t a = 0; a < p; ++a)
                if (auto n = table.count(static_cast<int>(a), static_cast<int>(b),
                                         static_cast<int>(c)))
                    acc += Rational(n) * f.values()[a];
            mat[c][b] = acc;
        }
    std::vector<Rational> rhs(p, Rational(0));
    const auto delta_vec = delta<Rational>(f.degree());
    for (std::size_t c = 0; c < p; ++c) rhs[c] = delta_vec.values()[c];
    return ClassFunction<Rational>(f.degree(), solve_exact(std::move(mat), std::move(rhs)));
}

const ClassFunction<Rational>& inverse_mu_identity(int m, int i) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ClassFunction<Rational>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{m, i}];
    if (!slot)
        slot = std::make_unique<ClassFunction<Rational>>(invert(mu_identity(m, i)));
    return *slot;
}

}  // namespace specstats

#pragma once

#include "specstats/errors.hpp"
#include "specstats/partitions.hpp"
#include "specstats/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace specstats {

// Rational- or double-valued function on the cycle classes of S_i, i.e. an
// element of the centre of the group algebra. Values are aligned with
// enumerate_partitions(degree).
template <class T>
class ClassFunction {
public:
    ClassFunction(int degree, std::vector<T> values)
        : degree_(degree),
          classes_(enumerate_partitions(degree)),
          values_(std::move(values)) {
        if (values_.size() != classes_.size())
            throw std::invalid_argument("ClassFunction: one value per cycle class required");
    }

    static ClassFunction zero(int degree) {
        return ClassFunction(degree,
                             std::vector<T>(enumerate_partitions(degree).size(), T(0)));
    }

    int degree() const { return degree_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<IntegerPartition>& classes() const { return classes_; }
    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }

    const T& at(const IntegerPartition& lambda) const {
        return values_[index_of(lambda)];
    }
    T& at(const IntegerPartition& lambda) { return values_[index_of(lambda)]; }

    std::size_t index_of(const IntegerPartition& lambda) const {
        for (std::size_t k = 0; k < classes_.size(); ++k)
            if (classes_[k] == lambda) return k;
        throw std::invalid_argument("ClassFunction: " + lambda.to_string() +
                                    " is not a class of degree " + std::to_string(degree_));
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.degree_ == b.degree_ && a.values_ == b.values_;
    }

private:
    int degree_;
    std::vector<IntegerPartition> classes_;
    std::vector<T> values_;
};

// Structure constants of the class algebra:
// count(a, b, c) = #{rho in S_i : rho in class a, rho^{-1} sigma_0 in class b}
// for a fixed representative sigma_0 of class c. Built once per degree by
// brute force over S_i (cost i! * p(i) compositions) and cached.
class ClassConvolutionTable {
public:
    static const ClassConvolutionTable& of_degree(int i, int cap = kCombinatDegreeCap);

    int degree() const { return degree_; }
    const std::vector<IntegerPartition>& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    std::int64_t count(int rho_class, int omega_class, int sigma_class) const {
        const auto p = static_cast<std::size_t>(class_count());
        return counts_[(static_cast<std::size_t>(rho_class) * p +
                        static_cast<std::size_t>(omega_class)) * p +
                       static_cast<std::size_t>(sigma_class)];
    }
    std::size_t index_of(const IntegerPartition& lambda) const;

private:
    explicit ClassConvolutionTable(int i);

    int degree_;
    std::vector<IntegerPartition> classes_;
    std::vector<std::int64_t> counts_;
};

template <class T>
ClassFunction<T> convolve(const ClassFunction<T>& f, const ClassFunction<T>& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("convolve: degree mismatch");
    const auto& table = ClassConvolutionTable::of_degree(f.degree());
    const int p = table.class_count();
    ClassFunction<T> out = ClassFunction<T>::zero(f.degree());
    for (int c = 0; c < p; ++c) {
        T acc(0);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                if (auto n = table.count(a, b, c))
                    acc += T(n) * f.values()[static_cast<std::size_t>(a)] *
                           g.values()[static_cast<std::size_t>(b)];
        out.values()[static_cast<std::size_t>(c)] = acc;
    }
    return out;
}

// Unit of convolution: 1 on the identity class (1^i), 0 elsewhere.
template <class T>
ClassFunction<T> delta(int i) {
    auto out = ClassFunction<T>::zero(i);
    out.at(IntegerPartition(std::vector<int>(static_cast<std::size_t>(i), 1))) = T(1);
    return out;
}

// mu(I_m): value m^{l(lambda)} on class lambda.
ClassFunction<Rational> mu_identity(int m, int i);

// Convolution inverse: g with f*g = g*f = delta, solved exactly.
// Throws NotInvertibleError when no inverse exists.
ClassFunction<Rational> invert(const ClassFunction<Rational>& f);

// invert(mu_identity(m, i)), cached per (m, i). Exists whenever i <= m.
const ClassFunction<Rational>& inverse_mu_identity(int m, int i);

template <class To, class From>
ClassFunction<To> convert(const ClassFunction<From>& f);

template <>
inline ClassFunction<double> convert<double, Rational>(const ClassFunction<Rational>& f) {
    std::vector<double> v;
    v.reserve(f.values().size());
    for (const auto& q : f.values()) v.push_back(to_double(q));
    return ClassFunction<double>(f.degree(), std::move(v));
}

template <>
inline ClassFunction<Rational> convert<Rational, Rational>(const ClassFunction<Rational>& f) {
    return f;
}

}  // namespace specstats

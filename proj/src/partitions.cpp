#include "specstats/partitions.hpp"

#include "specstats/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace specstats {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("IntegerPartition: parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

IntegerPartition::IntegerPartition(std::initializer_list<int> parts)
    : IntegerPartition(std::vector<int>(parts)) {}

int IntegerPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> IntegerPartition::multiplicities() const {
    std::vector<int> r(static_cast<std::size_t>(weight()) + 1, 0);
    for (int p : parts_) ++r[static_cast<std::size_t>(p)];
    return r;
}

std::string IntegerPartition::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(parts_[k]);
    }
    s += ')';
    return s;
}

std::vector<IntegerPartition> enumerate_partitions(int i, int cap) {
    if (i < 1) throw std::invalid_argument("enumerate_partitions: i must be >= 1");
    if (i > cap) throw CapacityError("enumerate_partitions: degree " + std::to_string(i) +
                                     " exceeds cap " + std::to_string(cap));
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            out.push_back(IntegerPartition(cur));
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(i, i);
    return out;
}

Int coeff_s(const IntegerPartition& lambda) {
    const int i = lambda.weight();
    Int den = 1;
    const auto r = lambda.multiplicities();
    for (int j = 1; j <= i; ++j) {
        den *= int_pow(Int(j), r[static_cast<std::size_t>(j)]);
        den *= int_factorial(r[static_cast<std::size_t>(j)]);
    }
    return int_factorial(i) / den;
}

Rational coeff_d(const IntegerPartition& lambda) {
    const int i = lambda.weight();
    Int den = 1;
    const auto r = lambda.multiplicities();
    for (int j = 1; j <= i; ++j) {
        den *= int_pow(int_factorial(j), r[static_cast<std::size_t>(j)]);
        den *= int_factorial(r[static_cast<std::size_t>(j)]);
    }
    return Rational(int_factorial(i), den);
}

Int polykay_prefactor(const IntegerPartition& lambda) {
    Int r = 1;
    for (int p : lambda.parts()) r *= int_factorial(p - 1);
    return r;
}

}  // namespace specstats

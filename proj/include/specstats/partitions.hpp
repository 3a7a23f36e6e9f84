#pragma once

#include "specstats/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace specstats {

// Enumeration caps. Bell(8) = 4140 and 8! = 40320 keep every brute-force
// table desk-sized; the spectral statistics stop earlier because each degree
// needs the full S_i convolution table.
inline constexpr int kCombinatDegreeCap = 8;
inline constexpr int kSpectralDegreeCap = 6;

// Partition of a positive integer; parts weakly decreasing, all >= 1.
class IntegerPartition {
public:
    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> parts);
    IntegerPartition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    // r_j = number of parts equal to j, for j = 1..weight (index 0 unused).
    std::vector<int> multiplicities() const;

    std::string to_string() const;  // "(2,1)"

    friend bool operator==(const IntegerPartition& a, const IntegerPartition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const IntegerPartition& a, const IntegerPartition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

// All partitions of i, reverse-lexicographic: (i) first, (1^i) last.
std::vector<IntegerPartition> enumerate_partitions(int i, int cap = kCombinatDegreeCap);

// s_lambda: number of permutations in S_i of cycle class lambda,
// i! / (1^{r_1} r_1! 2^{r_2} r_2! ...).
Int coeff_s(const IntegerPartition& lambda);

// d_lambda = i! / ((1!)^{r_1} r_1! (2!)^{r_2} r_2! ...); integer-valued.
Rational coeff_d(const IntegerPartition& lambda);

// (1!)^{r_2} (2!)^{r_3} ... = product over parts p of (p-1)!.
// Satisfies d_lambda * polykay_prefactor = s_lambda.
Int polykay_prefactor(const IntegerPartition& lambda);

}  // namespace specstats

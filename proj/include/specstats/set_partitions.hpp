#pragma once

#include "specstats/partitions.hpp"
#include "specstats/rational.hpp"

#include <vector>

namespace specstats {

// Partition of {1..n}. Canonical form: each block ascending, blocks ordered
// by minimum element; equivalently the restricted growth string.
class SetPartition {
public:
    SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

    static SetPartition singletons(int n);
    static SetPartition one_block(int n);
    // Consecutive runs {1..l1}, {l1+1..l1+l2}, ...: the canonical partition of
    // the given block-size class.
    static SetPartition of_shape(const IntegerPartition& lambda);

    int ground_size() const { return ground_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // Block index of each element; rgs()[e-1] is the block containing e.
    std::vector<int> rgs() const;
    // Block sizes sorted decreasing: the class of the partition.
    IntegerPartition shape() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        return a.rgs() < b.rgs();
    }

private:
    int ground_;
    std::vector<std::vector<int>> blocks_;
};

// All partitions of {1..i} in restricted-growth-string order; Bell(i) of them.
std::vector<SetPartition> enumerate_set_partitions(int i, int cap = kCombinatDegreeCap);

// pi <= tau in the refinement order: every block of pi inside a block of tau.
bool refines(const SetPartition& pi, const SetPartition& tau);

// Moebius function of the interval [pi, tau] in the partition lattice,
// (-1)^{s-t} (2!)^{r_3} (3!)^{r_4} ... where r_j blocks of tau contain exactly
// j blocks of pi. Requires pi <= tau.
Rational moebius(const SetPartition& pi, const SetPartition& tau);

bool is_noncrossing(const SetPartition& p);

// Noncrossing partitions of {1..i}; Catalan(i) of them.
std::vector<SetPartition> enumerate_noncrossing(int i, int cap = kCombinatDegreeCap);

}  // namespace specstats

#include "specstats/set_partitions.hpp"

#include "specstats/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace specstats {

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : ground_(ground_size), blocks_(std::move(blocks)) {
    if (ground_ < 1) throw std::invalid_argument("SetPartition: ground set must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(ground_) + 1, false);
    int covered = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            if (e < 1 || e > ground_)
                throw std::invalid_argument("SetPartition: element outside ground set");
            if (seen[static_cast<std::size_t>(e)])
                throw std::invalid_argument("SetPartition: blocks not disjoint");
            seen[static_cast<std::size_t>(e)] = true;
            ++covered;
        }
    }
    if (covered != ground_)
        throw std::invalid_argument("SetPartition: blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::singletons(int n) {
    std::vector<std::vector<int>> b;
    for (int e = 1; e <= n; ++e) b.push_back({e});
    return SetPartition(n, std::move(b));
}

SetPartition SetPartition::one_block(int n) {
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int e = 1; e <= n; ++e) b[static_cast<std::size_t>(e) - 1] = e;
    return SetPartition(n, {b});
}

SetPartition SetPartition::of_shape(const IntegerPartition& lambda) {
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int p : lambda.parts()) {
        std::vector<int> b;
        for (int k = 0; k < p; ++k) b.push_back(next++);
        blocks.push_back(std::move(b));
    }
    return SetPartition(lambda.weight(), std::move(blocks));
}

std::vector<int> SetPartition::rgs() const {
    std::vector<int> a(static_cast<std::size_t>(ground_), -1);
    for (int bi = 0; bi < block_count(); ++bi)
        for (int e : blocks_[static_cast<std::size_t>(bi)])
            a[static_cast<std::size_t>(e) - 1] = bi;
    return a;
}

IntegerPartition SetPartition::shape() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    return IntegerPartition(std::move(sizes));
}

std::vector<SetPartition> enumerate_set_partitions(int i, int cap) {
    if (i < 1) throw std::invalid_argument("enumerate_set_partitions: i must be >= 1");
    if (i > cap)
        throw CapacityError("enumerate_set_partitions: degree " + std::to_string(i) +
                            " exceeds cap " + std::to_string(cap));
    std::vector<SetPartition> out;
    std::vector<int> a(static_cast<std::size_t>(i), 0);
    // restricted growth strings: a[0]=0, a[k] <= 1 + max(a[0..k-1])
    auto emit = [&] {
        int nb = 1 + *std::max_element(a.begin(), a.end());
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nb));
        for (int e = 1; e <= i; ++e)
            blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(e) - 1])].push_back(e);
        out.emplace_back(i, std::move(blocks));
    };
    std::function<void(int, int)> rec = [&](int k, int mx) {
        if (k == i) {
            emit();
            return;
        }
        for (int b = 0; b <= mx + 1; ++b) {
            a[static_cast<std::size_t>(k)] = b;
            rec(k + 1, std::max(mx, b));
        }
    };
    rec(1, 0);  // a[0] fixed to 0
    return out;
}

bool refines(const SetPartition& pi, const SetPartition& tau) {
    if (pi.ground_size() != tau.ground_size())
        throw std::invalid_argument("refines: mismatched ground sets");
    const auto tid = tau.rgs();
    for (const auto& b : pi.blocks()) {
        const int t0 = tid[static_cast<std::size_t>(b.front()) - 1];
        for (int e : b)
            if (tid[static_cast<std::size_t>(e) - 1] != t0) return false;
    }
    return true;
}

Rational moebius(const SetPartition& pi, const SetPartition& tau) {
    if (!refines(pi, tau)) throw std::invalid_argument("moebius: pi is not a refinement of tau");
    const auto tid = tau.rgs();
    std::vector<int> inner(static_cast<std::size_t>(tau.block_count()), 0);
    for (const auto& b : pi.blocks())
        ++inner[static_cast<std::size_t>(tid[static_cast<std::size_t>(b.front()) - 1])];
    Int v = 1;
    for (int j : inner) v *= int_factorial(j - 1);
    const int s = pi.block_count(), t = tau.block_count();
    if ((s - t) % 2 != 0) v = -v;
    return Rational(v);
}

bool is_noncrossing(const SetPartition& p) {
    // Scan left to right keeping a stack of open blocks; noncrossing iff
    // blocks close in LIFO order.
    const int n = p.ground_size();
    const auto bid = p.rgs();
    std::vector<int> first(static_cast<std::size_t>(p.block_count()), 0);
    std::vector<int> last(static_cast<std::size_t>(p.block_count()), 0);
    for (const auto& b : p.blocks()) {
        const int id = bid[static_cast<std::size_t>(b.front()) - 1];
        first[static_cast<std::size_t>(id)] = b.front();
        last[static_cast<std::size_t>(id)] = b.back();
    }
    std::vector<int> stack;
    for (int e = 1; e <= n; ++e) {
        const int b = bid[static_cast<std::size_t>(e) - 1];
        if (first[static_cast<std::size_t>(b)] == e) {
            stack.push_back(b);
        } else if (stack.empty() || stack.back() != b) {
            return false;  // continues a block that is not the innermost open one
        }
        if (last[static_cast<std::size_t>(b)] == e) stack.pop_back();
    }
    return true;
}

std::vector<SetPartition> enumerate_noncrossing(int i, int cap) {
    std::vector<SetPartition> out;
    for (auto& p : enumerate_set_partitions(i, cap))
        if (is_noncrossing(p)) out.push_back(std::move(p));
    return out;
}

}  // namespace specstats

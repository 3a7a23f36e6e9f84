#include "specstats/classical.hpp"

#include <map>
#include <mutex>

namespace specstats::detail {

const std::vector<AugTerm>& augmented_terms(int length) {
    static std::mutex mu;
    static std::map<int, std::vector<AugTerm>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(length);
    if (it != cache.end()) return it->second;

    std::vector<AugTerm> terms;
    for (const auto& pi : enumerate_set_partitions(length)) {
        long long coeff = 1;
        std::vector<std::vector<int>> blocks;
        for (const auto& b : pi.blocks()) {
            long long f = 1;
            for (int j = 2; j < static_cast<int>(b.size()); ++j) f *= j;
            coeff *= (b.size() % 2 == 0 ? -f : f);
            std::vector<int> positions;
            for (int e : b) positions.push_back(e - 1);
            blocks.push_back(std::move(positions));
        }
        terms.push_back(AugTerm{coeff, std::move(blocks)});
    }
    return cache.emplace(length, std::move(terms)).first->second;
}

const std::vector<KTerm>& k_statistic_terms(const IntegerPartition& lambda) {
    static const std::map<IntegerPartition, std::vector<KTerm>> table = {
        {{1}, {{1, {1}}}},
        {{1, 1}, {{1, {1, 1}}}},
        {{2}, {{1, {2}}, {-1, {1, 1}}}},
        {{1, 1, 1}, {{1, {1, 1, 1}}}},
        {{2, 1}, {{1, {2, 1}}, {-1, {1, 1, 1}}}},
        {{3}, {{1, {3}}, {-3, {2, 1}}, {2, {1, 1, 1}}}},
        {{1, 1, 1, 1}, {{1, {1, 1, 1, 1}}}},
        {{2, 1, 1}, {{1, {2, 1, 1}}, {-1, {1, 1, 1, 1}}}},
        {{3, 1}, {{1, {3, 1}}, {-3, {2, 1, 1}}, {2, {1, 1, 1, 1}}}},
        {{2, 2}, {{1, {2, 2}}, {-2, {2, 1, 1}}, {1, {1, 1, 1, 1}}}},
        {{4},
         {{1, {4}}, {-4, {3, 1}}, {-3, {2, 2}}, {12, {2, 1, 1}}, {-6, {1, 1, 1, 1}}}},
    };
    auto it = table.find(lambda);
    if (it == table.end())
        throw CapacityError("k_statistic: no table entry for " + lambda.to_string());
    return it->second;
}

}  // namespace specstats::detail

namespace specstats {

const std::vector<std::string>& tukey_identity_ids() {
    static const std::vector<std::string> ids = {"1^2", "1,2",   "1^3", "1,3",
                                                 "2^2", "1^2,2", "1^4"};
    return ids;
}

}  // namespace specstats

#pragma once

#include <array>
#include <cstdint>

namespace specstats {

// Deterministic splittable stream: (master seed, stream index) fully
// determines the sequence. State is xoshiro256** seeded through SplitMix64,
// so distinct stream indices give statistically independent streams; Monte
// Carlo callers allocate one stream per replicate index.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    // uniform in [0, 1) with 53 random bits
    double next_double();
    // standard normal, trigonometric Box-Muller (fixed consumption: two
    // uniforms per pair, second value cached)
    double next_gaussian();
    // uniform in {0, .., bound-1}, unbiased (rejection)
    std::uint64_t next_below(std::uint64_t bound);

    static const char* algorithm_name() { return "xoshiro256**/splitmix64/box-muller"; }

private:
    std::array<std::uint64_t, 4> state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace specstats

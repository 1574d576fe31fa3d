#pragma once

#include <cstddef>
#include <cstdint>

namespace qmachine {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// splitmix64 (Vigna's public-domain reference sequence). Counter-based:
/// the i-th output is mix64(seed + (i+1) * 0x9e3779b97f4a7c15), so any
/// output can be reproduced from (seed, i) alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [-half_width, +half_width).
    double next_symmetric(double half_width) {
        return half_width * (2.0 * next_unit() - 1.0);
    }

private:
    std::uint64_t state_;
};

/// Trials are processed in shards of fixed size 2^16; shard k draws from its
/// own splitmix64 stream seeded with shard_seed(master, k). Counts are
/// therefore identical no matter how shards are distributed over workers.
inline constexpr std::int64_t kShardSize = std::int64_t{1} << 16;

inline std::uint64_t shard_seed(std::uint64_t master, std::uint64_t shard_index) {
    return mix64(master ^ mix64(0x736861726400ULL + shard_index));
}

/// Independent sub-stream seeds for jobs that run several Monte Carlo
/// estimates under one master seed (CSV rows, the four CHSH correlations).
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream_index) {
    return mix64(master ^ mix64(0x73747265616d00ULL + stream_index));
}

} // namespace qmachine

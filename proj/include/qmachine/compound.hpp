#pragma once

#include "qmachine/hilbert.hpp"
#include "qmachine/machine.hpp"

#include <cstdint>

namespace qmachine {

struct CorrelatedOutcomes {
    Outcome first;
    Outcome second;
};

/// One trial of the rigid-rod model. Both machines start in the center
/// state. Machine 1 is measured along a (each outcome has probability 1/2
/// from the center); the rod then places machine 2's particle at the point
/// antipodal to machine 1's final point, and machine 2 is measured along b
/// from that surface state. The product correlation is E(a, b) = -cos gamma,
/// the singlet value; measurement order is unobservable in the statistics.
inline CorrelatedOutcomes sample_correlated_pair(const Direction& a, const Direction& b,
                                                 SplitMix64& rng) {
    const MachineExperiment ea(a);
    const MachineExperiment eb(b);
    const MeasurementResult side1 = sample_measurement(ea, BallPoint::center(), rng);
    const BallPoint transported(Vec3(-side1.state.vec()));
    const MeasurementResult side2 = sample_measurement(eb, transported, rng);
    return {side1.outcome, side2.outcome};
}

struct CorrelationReport {
    Direction a;
    Direction b;
    std::int64_t n;
    double E;
    std::uint64_t seed;
};

/// E(a, b) = (n++ + n-- - n+- - n-+) / n over n sampled pairs, with
/// o1 -> +1 and o2 -> -1. Sharded seeding as in run_trials (one pair per
/// two draws), deterministic for a fixed seed.
inline CorrelationReport estimate_correlation(const Direction& a, const Direction& b,
                                              std::int64_t n, std::uint64_t seed) {
    if (n < 1)
        throw std::domain_error("estimate_correlation: need at least one pair");
    std::int64_t sum = 0;
    const std::int64_t shards = shard_count(n);
    for (std::int64_t k = 0; k < shards; ++k) {
        SplitMix64 g(shard_seed(seed, static_cast<std::uint64_t>(k)));
        const std::int64_t m = std::min(kShardSize, n - k * kShardSize);
        for (std::int64_t i = 0; i < m; ++i) {
            const CorrelatedOutcomes pair = sample_correlated_pair(a, b, g);
            sum += outcome_sign(pair.first) * outcome_sign(pair.second);
        }
    }
    return {a, b, n, static_cast<double>(sum) / static_cast<double>(n), seed};
}

/// CHSH value S = |E(a,b) - E(a,b')| + |E(a',b) + E(a',b')| from four
/// estimate_correlation runs with sub-seeds stream_seed(seed, 0..3).
inline double chsh_value(const Direction& a, const Direction& a_prime, const Direction& b,
                         const Direction& b_prime, std::int64_t n, std::uint64_t seed) {
    const double e_ab = estimate_correlation(a, b, n, stream_seed(seed, 0)).E;
    const double e_ab2 = estimate_correlation(a, b_prime, n, stream_seed(seed, 1)).E;
    const double e_a2b = estimate_correlation(a_prime, b, n, stream_seed(seed, 2)).E;
    const double e_a2b2 = estimate_correlation(a_prime, b_prime, n, stream_seed(seed, 3)).E;
    return std::abs(e_ab - e_ab2) + std::abs(e_a2b + e_a2b2);
}

} // namespace qmachine

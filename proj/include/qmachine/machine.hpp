#pragma once

#include "qmachine/geometry.hpp"
#include "qmachine/rng.hpp"

#include <cstdint>
#include <stdexcept>

namespace qmachine {

/// A point of the closed unit ball: the state space of the machine.
class BallPoint {
public:
    explicit BallPoint(const Vec3& w) : w_(w) {
        if (!w.allFinite() || w.norm() > 1.0 + kTol)
            throw std::domain_error("BallPoint: point lies outside the unit ball");
    }

    explicit BallPoint(const Direction& d) : w_(d.vec()) {}

    static BallPoint center() { return BallPoint(Vec3::Zero()); }

    const Vec3& vec() const { return w_; }

private:
    Vec3 w_;
};

enum class Outcome { O1, O2 };

inline int outcome_sign(Outcome o) { return o == Outcome::O1 ? +1 : -1; }

/// An elastic experiment along a unit direction. The elastic can break only
/// on the segment [-epsilon, +epsilon] of its axis; epsilon = 1 is the
/// quantum elastic, epsilon -> 0 the classical one.
struct MachineExperiment {
    Direction axis;
    double epsilon;

    explicit MachineExperiment(const Direction& u, double eps = 1.0)
        : axis(u), epsilon(eps) {
        if (!(eps > 0.0) || eps > 1.0)
            throw std::domain_error("MachineExperiment: epsilon must lie in (0, 1]");
    }
};

struct OutcomeProbabilities {
    double o1;
    double o2;
};

/// Exact outcome probabilities of the quantum elastic: the particle falls
/// onto the axis at x = <u, w>, the elastic breaks uniformly, and the piece
/// length in favour of o1 is (1 + x) out of 2. For |w| = 1 this is
/// (cos^2(gamma/2), sin^2(gamma/2)) with gamma the angle between u and w.
inline OutcomeProbabilities transition_probability(const Direction& u, const BallPoint& w) {
    const double x = u.vec().dot(w.vec());
    const double o1 = std::clamp(0.5 * (1.0 + x), 0.0, 1.0);
    return {o1, 1.0 - o1};
}

/// Outcome probabilities for an epsilon-elastic. With x = <u, w>:
/// x <= -eps gives (0, 1), x >= +eps gives (1, 0), and in between the break
/// segment [-eps, eps] splits at x, so o1 = (eps + x) / (2 eps). Continuous
/// in x and equal to transition_probability at eps = 1.
inline OutcomeProbabilities epsilon_probability(const MachineExperiment& e, const BallPoint& w) {
    const double x = e.axis.vec().dot(w.vec());
    const double eps = e.epsilon;
    if (x <= -eps)
        return {0.0, 1.0};
    if (x >= eps)
        return {1.0, 0.0};
    const double o1 = (eps + x) / (2.0 * eps);
    return {o1, 1.0 - o1};
}

struct MeasurementResult {
    Outcome outcome;
    BallPoint state;
};

/// The deterministic part of a measurement: once the break point is known
/// the particle is pulled to u (outcome o1) when the break lies below its
/// projection, to -u (outcome o2) otherwise. Ties break to o2, a
/// measure-zero event under the uniform break law.
inline MeasurementResult apply_break(const Direction& u, const BallPoint& w, double break_point) {
    if (!(break_point >= -1.0 && break_point <= 1.0))
        throw std::domain_error("apply_break: break point must lie in [-1, 1]");
    const double x = u.vec().dot(w.vec());
    if (break_point < x)
        return {Outcome::O1, BallPoint(u)};
    return {Outcome::O2, BallPoint(-u)};
}

/// One hidden measurement: draw the break point uniformly on the breakable
/// segment [-eps, +eps) and apply it. Consumes exactly one draw.
inline MeasurementResult sample_measurement(const MachineExperiment& e, const BallPoint& w,
                                            SplitMix64& rng) {
    return apply_break(e.axis, w, rng.next_symmetric(e.epsilon));
}

struct TrialReport {
    std::int64_t n_trials;
    std::int64_t count_o1;
    std::int64_t count_o2;
    double freq_o1;
    double analytic_o1;
    std::uint64_t seed;
};

inline std::int64_t shard_count(std::int64_t n) {
    return (n + kShardSize - 1) / kShardSize;
}

/// n independent hidden measurements under the sharded seeding contract.
/// Bit-reproducible for a fixed (seed, n): shard k covers trials
/// [k*2^16, (k+1)*2^16) with its own stream, so worker layout cannot change
/// the counts.
inline TrialReport run_trials(const MachineExperiment& e, const BallPoint& w, std::int64_t n,
                              std::uint64_t seed) {
    if (n < 1)
        throw std::domain_error("run_trials: need at least one trial");
    std::int64_t count_o1 = 0;
    const std::int64_t shards = shard_count(n);
    for (std::int64_t k = 0; k < shards; ++k) {
        SplitMix64 g(shard_seed(seed, static_cast<std::uint64_t>(k)));
        const std::int64_t m = std::min(kShardSize, n - k * kShardSize);
        for (std::int64_t i = 0; i < m; ++i) {
            if (sample_measurement(e, w, g).outcome == Outcome::O1)
                ++count_o1;
        }
    }
    const double freq = static_cast<double>(count_o1) / static_cast<double>(n);
    return {n, count_o1, n - count_o1, freq, epsilon_probability(e, w).o1, seed};
}

} // namespace qmachine

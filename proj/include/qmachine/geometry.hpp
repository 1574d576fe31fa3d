#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmachine {

using Vec3 = Eigen::Vector3d;

/// Single project-wide tolerance for unit norms and algebraic identities.
inline constexpr double kTol = 1e-12;

/// Spherical coordinates (rho, theta, phi) with rho >= 0, theta in [0, pi],
/// phi in [0, 2*pi).
struct Spherical {
    double rho;
    double theta;
    double phi;
};

/// A unit vector of R^3. The constructor rejects anything whose norm
/// deviates from 1 by more than kTol.
class Direction {
public:
    explicit Direction(const Vec3& v) : v_(v) {
        if (!v.allFinite() || std::abs(v.norm() - 1.0) > kTol)
            throw std::domain_error("Direction: vector is not unit length");
    }

    const Vec3& vec() const { return v_; }

    Direction operator-() const {
        Direction d(*this);
        d.v_ = -d.v_;
        return d;
    }

private:
    Vec3 v_;
};

inline Vec3 spherical_to_cartesian(const Spherical& s) {
    return Vec3(s.rho * std::sin(s.theta) * std::cos(s.phi),
                s.rho * std::sin(s.theta) * std::sin(s.phi),
                s.rho * std::cos(s.theta));
}

/// Inverse of spherical_to_cartesian. On the poles (x = y = 0) any phi is
/// valid; the canonical choice here is phi = 0, and rho = 0 maps to
/// (0, 0, 0).
inline Spherical cartesian_to_spherical(const Vec3& v) {
    const double rho = v.norm();
    if (rho == 0.0)
        return {0.0, 0.0, 0.0};
    const double cos_theta = std::clamp(v.z() / rho, -1.0, 1.0);
    const double theta = std::acos(cos_theta);
    if (v.x() == 0.0 && v.y() == 0.0)
        return {rho, theta, 0.0};
    double phi = std::atan2(v.y(), v.x());
    if (phi < 0.0)
        phi += 2.0 * std::numbers::pi;
    if (phi >= 2.0 * std::numbers::pi)
        phi = 0.0;
    return {rho, theta, phi};
}

inline Direction direction_from_angles(double theta, double phi) {
    return Direction(spherical_to_cartesian({1.0, theta, phi}));
}

/// Angle between two nonzero vectors, in [0, pi]. The cosine is clamped to
/// [-1, 1] before acos: dot products of unit vectors may exceed 1 by ulps.
inline double angle_between(const Vec3& u, const Vec3& v) {
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0)
        throw std::domain_error("angle_between: zero vector");
    const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

} // namespace qmachine

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmachine/geometry.hpp"
#include "qmachine/rng.hpp"

#include <cmath>
#include <numbers>

using namespace qmachine;

namespace {

constexpr double pi = std::numbers::pi;

Vec3 random_point(SplitMix64& g, double scale) {
    return Vec3(scale * (2.0 * g.next_unit() - 1.0), scale * (2.0 * g.next_unit() - 1.0),
                scale * (2.0 * g.next_unit() - 1.0));
}

Direction random_direction(SplitMix64& g) {
    // z uniform on [-1, 1), phi uniform on [0, 2 pi): uniform on the sphere.
    const double z = 2.0 * g.next_unit() - 1.0;
    return direction_from_angles(std::acos(z), 2.0 * pi * g.next_unit());
}

} // namespace

TEST_CASE("spherical_to_cartesian on the reference points") {
    CHECK((spherical_to_cartesian({1, 0, 0}) - Vec3(0, 0, 1)).norm() <= kTol);
    CHECK((spherical_to_cartesian({1, pi / 2, 0}) - Vec3(1, 0, 0)).norm() <= kTol);
    CHECK((spherical_to_cartesian({2, pi / 2, pi / 2}) - Vec3(0, 2, 0)).norm() <= kTol);
}

TEST_CASE("coordinate round trip preserves points with rho > 0") {
    SplitMix64 g(11);
    for (int i = 0; i < 2000; ++i) {
        const Vec3 v = random_point(g, 2.0);
        if (v.norm() == 0.0)
            continue;
        const Spherical s = cartesian_to_spherical(v);
        CHECK(s.rho >= 0.0);
        CHECK(s.theta >= 0.0);
        CHECK(s.theta <= pi);
        CHECK(s.phi >= 0.0);
        CHECK(s.phi < 2 * pi);
        CHECK((spherical_to_cartesian(s) - v).norm() <= 1e-12);
    }
}

TEST_CASE("poles take the canonical phi = 0") {
    CHECK(cartesian_to_spherical(Vec3(0, 0, 2)).phi == 0.0);
    CHECK(cartesian_to_spherical(Vec3(0, 0, -1)).phi == 0.0);
    CHECK(cartesian_to_spherical(Vec3(0, 0, 0)).rho == 0.0);
}

TEST_CASE("angle_between on the reference pairs") {
    const Vec3 ex(1, 0, 0), ey(0, 1, 0);
    CHECK(angle_between(ex, ex) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(angle_between(ex, Vec3(-ex)) == doctest::Approx(pi).epsilon(1e-12));
    CHECK(angle_between(ex, ey) == doctest::Approx(pi / 2).epsilon(1e-12));
    CHECK_THROWS_AS(angle_between(Vec3::Zero(), ex), std::domain_error);
    CHECK_THROWS_AS(angle_between(ex, Vec3::Zero()), std::domain_error);
}

TEST_CASE("angle_between survives near-collinear rounding") {
    // A vector and a tiny rescaling of itself: the cosine can exceed 1 by
    // ulps, the clamp keeps acos in its domain.
    SplitMix64 g(5);
    for (int i = 0; i < 500; ++i) {
        const Vec3 v = random_point(g, 1.0);
        if (v.norm() < 0.1)
            continue;
        const double a = angle_between(v, Vec3(3.0000000000001 * v));
        CHECK(std::isfinite(a));
        CHECK(a <= 1e-6);
    }
}

TEST_CASE("inproduct identities hold componentwise") {
    SplitMix64 g(17);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 u = random_point(g, 3.0);
        const Vec3 v = random_point(g, 3.0);
        const Vec3 w = random_point(g, 3.0);
        const double r = 4.0 * (g.next_unit() - 0.5);
        CHECK(std::abs(v.dot(v) - v.norm() * v.norm()) <= 1e-12 * std::max(1.0, v.squaredNorm()));
        CHECK(std::abs((u + v).dot(w) - (u.dot(w) + v.dot(w))) <= 1e-12);
        CHECK(((u + v) - Vec3(u.x() + v.x(), u.y() + v.y(), u.z() + v.z())).norm() == 0.0);
        CHECK((r * u - Vec3(r * u.x(), r * u.y(), r * u.z())).norm() == 0.0);
        CHECK(std::abs(u.dot(v) - (u.x() * v.x() + u.y() * v.y() + u.z() * v.z())) <= 1e-12);
    }
}

TEST_CASE("angle_between agrees with the inproduct definition") {
    SplitMix64 g(23);
    for (int i = 0; i < 500; ++i) {
        const Direction u = random_direction(g);
        const Direction v = random_direction(g);
        const double gamma = angle_between(u.vec(), v.vec());
        CHECK(std::abs(u.vec().dot(v.vec()) - std::cos(gamma)) <= 1e-12);
    }
}

TEST_CASE("Direction rejects non-unit vectors") {
    CHECK_THROWS_AS(Direction(Vec3(1, 1, 0)), std::domain_error);
    CHECK_THROWS_AS(Direction(Vec3::Zero()), std::domain_error);
    const Direction d(Vec3(0, 0, 1));
    CHECK(((-d).vec() - Vec3(0, 0, -1)).norm() == 0.0);
}

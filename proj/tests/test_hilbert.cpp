#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmachine/hilbert.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

using namespace qmachine;

namespace {

constexpr double pi = std::numbers::pi;

Direction random_direction(SplitMix64& g) {
    const double z = 2.0 * g.next_unit() - 1.0;
    return direction_from_angles(std::acos(z), 2 * pi * g.next_unit());
}

Spinor2 random_spinor(SplitMix64& g) {
    Spinor2 c(Complex(2 * g.next_unit() - 1, 2 * g.next_unit() - 1),
              Complex(2 * g.next_unit() - 1, 2 * g.next_unit() - 1));
    return c / c.norm();
}

bool same_ray(const Spinor2& a, const Spinor2& b) {
    return std::abs(std::abs(a.dot(b)) - 1.0) <= 1e-12;
}

} // namespace

TEST_CASE("spin states at the poles") {
    CHECK((spin_state(0, 0) - Spinor2(Complex(1), Complex(0))).norm() <= kTol);
    CHECK((spin_state(pi, 0) - Spinor2(Complex(0), Complex(1))).norm() <= kTol);
}

TEST_CASE("opposite directions give orthogonal states") {
    SplitMix64 g(3);
    for (int i = 0; i < 500; ++i) {
        const double theta = pi * g.next_unit();
        const double phi = 2 * pi * g.next_unit();
        const Spinor2 up = spin_state(theta, phi);
        const Spinor2 down = spin_state(pi - theta, phi + pi);
        CHECK(std::abs(up.norm() - 1.0) <= kTol);
        CHECK(std::abs(up.dot(down)) <= 1e-12);
    }
}

TEST_CASE("projectors along the z axis") {
    Operator2 up, down;
    up << Complex(1), Complex(0), Complex(0), Complex(0);
    down << Complex(0), Complex(0), Complex(0), Complex(1);
    CHECK(detail::max_abs(Operator2(projector_for_direction(0.0, 0.0) - up)) <= kTol);
    CHECK(detail::max_abs(Operator2(projector_for_direction(pi, 0.0) - down)) <= kTol);
}

TEST_CASE("projector identities for random directions") {
    SplitMix64 g(7);
    for (int i = 0; i < 500; ++i) {
        const Direction u = random_direction(g);
        const Operator2 p = projector_for_direction(u);
        CHECK(detail::max_abs(Operator2(p * p - p)) <= 1e-12);
        CHECK(detail::max_abs(Operator2(p - p.adjoint())) <= 1e-12);
        CHECK(std::abs(p.trace().real() - 1.0) <= 1e-12);
        CHECK(std::abs(p.trace().imag()) <= 1e-12);
        const Operator2 antipode = projector_for_direction(-u);
        CHECK(detail::max_abs(Operator2(Operator2::Identity() - p - antipode)) <= 1e-12);
    }
}

TEST_CASE("Born rule reference values") {
    // Own direction.
    SplitMix64 g(13);
    for (int i = 0; i < 200; ++i) {
        const Direction u = random_direction(g);
        CHECK(born_probability(spin_state_for(u), projector_for_direction(u)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    // z projector on (theta, phi) gives cos^2(theta/2).
    for (int i = 0; i < 200; ++i) {
        const double theta = pi * g.next_unit();
        const double phi = 2 * pi * g.next_unit();
        const double p = born_probability(spin_state(theta, phi), projector_for_direction(0, 0));
        CHECK(std::abs(p - std::cos(theta / 2) * std::cos(theta / 2)) <= 1e-12);
    }
    // Orthogonal directions give 1/2.
    const double half = born_probability(spin_state(pi / 2, 0), projector_for_direction(0, 0));
    CHECK(half == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("Born probabilities follow the half-angle law for random pairs") {
    SplitMix64 g(17);
    for (int i = 0; i < 100; ++i) {
        const Direction u = random_direction(g);
        const Direction v = random_direction(g);
        const Operator2 p = projector_for_direction(u);
        const double born = born_probability(spin_state_for(v), p);
        const double gamma = angle_between(u.vec(), v.vec());
        CHECK(std::abs(born - std::cos(gamma / 2) * std::cos(gamma / 2)) <= 1e-12);
        const double complement =
            born_probability(spin_state_for(v), Operator2(Operator2::Identity() - p));
        CHECK(std::abs(born + complement - 1.0) <= 1e-12);
    }
}

TEST_CASE("born_probability validates its inputs") {
    Operator2 not_projection;
    not_projection << Complex(1), Complex(1), Complex(0), Complex(1);
    CHECK_THROWS_AS(born_probability(spin_state(0, 0), not_projection), std::domain_error);
    CHECK_THROWS_AS(born_probability(Spinor2(Complex(2), Complex(0)),
                                     projector_for_direction(0, 0)),
                    std::domain_error);
}

TEST_CASE("collapse maps onto the branch ray") {
    SplitMix64 g(19);
    for (int i = 0; i < 200; ++i) {
        const Direction u = random_direction(g);
        const Operator2 p = projector_for_direction(u);
        const Spinor2 c = random_spinor(g);
        if (born_probability(c, p) <= 1e-6)
            continue;
        const Spinor2 after = collapse(c, p);
        CHECK(std::abs(after.norm() - 1.0) <= 1e-12);
        CHECK((p * after - after).norm() <= 1e-12);
        CHECK(born_probability(after, p) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(same_ray(collapse(after, p), after));
    }
    // z projector on a generic state keeps only the first amplitude.
    const Spinor2 c = spin_state(2.0, 1.3);
    const Spinor2 after = collapse(c, projector_for_direction(0, 0));
    CHECK(std::abs(std::abs(after(0)) - 1.0) <= 1e-12);
    CHECK(std::abs(after(1)) <= 1e-12);
    // Zero-probability branch is undefined.
    CHECK_THROWS_AS(collapse(spin_state(0, 0), projector_for_direction(pi, 0)),
                    std::domain_error);
}

TEST_CASE("densities of ball points") {
    // Surface point: the rank-1 density of its spinor.
    SplitMix64 g(23);
    for (int i = 0; i < 200; ++i) {
        const Direction v = random_direction(g);
        const Spinor2 c = spin_state_for(v);
        const Density2 w = density_from_ball_point(BallPoint(v));
        CHECK(detail::max_abs(Eigen::Matrix2cd(w.matrix() - c * c.adjoint())) <= 1e-12);
        CHECK(std::abs(w.min_eigenvalue()) <= 1e-12);
    }
    // Center: I/2, independent of the decomposition direction.
    const Density2 center = density_from_ball_point(BallPoint::center());
    CHECK(detail::max_abs(Eigen::Matrix2cd(center.matrix() -
                                           0.5 * Eigen::Matrix2cd::Identity())) <= 1e-12);
    for (int i = 0; i < 100; ++i) {
        const Direction v = random_direction(g);
        const Spinor2 up = spin_state_for(v);
        const Spinor2 down = spin_state_for(-v);
        const Eigen::Matrix2cd mix = 0.5 * (up * up.adjoint()) + 0.5 * (down * down.adjoint());
        CHECK(detail::max_abs(Eigen::Matrix2cd(mix - 0.5 * Eigen::Matrix2cd::Identity())) <=
              1e-12);
    }
    // Half way up the z axis: diag(0.75, 0.25).
    const Density2 half = density_from_ball_point(BallPoint(Vec3(0, 0, 0.5)));
    Eigen::Matrix2cd expected;
    expected << Complex(0.75), Complex(0), Complex(0), Complex(0.25);
    CHECK(detail::max_abs(Eigen::Matrix2cd(half.matrix() - expected)) <= 1e-12);
}

TEST_CASE("every ball point yields a valid density") {
    SplitMix64 g(29);
    for (int i = 0; i < 1000; ++i) {
        const Direction v = random_direction(g);
        const double r = g.next_unit();
        const Density2 w = density_from_ball_point(BallPoint(Vec3(r * v.vec())));
        CHECK(std::abs(w.matrix().trace().real() - 1.0) <= 1e-12);
        CHECK(w.min_eigenvalue() >= -1e-12);
    }
    Eigen::Matrix2cd bad;
    bad << Complex(1.5), Complex(0), Complex(0), Complex(-0.5);
    CHECK_THROWS_AS(Density2{bad}, std::domain_error);
}

TEST_CASE("trace rule against the machine probabilities") {
    const Density2 maximally_mixed(0.5 * Eigen::Matrix2cd::Identity());
    CHECK(trace_probability(maximally_mixed, projector_for_direction(0, 0)) ==
          doctest::Approx(0.5).epsilon(1e-12));

    // lambda-form along the z axis.
    SplitMix64 g(31);
    for (int i = 0; i < 200; ++i) {
        const double r = g.next_unit();
        const double theta = pi * g.next_unit();
        const Direction v = direction_from_angles(theta, 0.0);
        const BallPoint w(Vec3(r * v.vec()));
        const double l1 = 0.5 * (1 + r);
        const double expected = l1 * std::cos(theta / 2) * std::cos(theta / 2) +
                                (1 - l1) * std::sin(theta / 2) * std::sin(theta / 2);
        CHECK(std::abs(trace_probability(density_from_ball_point(w),
                                         projector_for_direction(0, 0)) -
                       expected) <= 1e-12);
    }

    // 1000-point grid: the machine module as the independent oracle.
    for (int i = 0; i < 1000; ++i) {
        const Direction u = random_direction(g);
        const Direction v = random_direction(g);
        const double r = g.next_unit();
        const BallPoint w(Vec3(r * v.vec()));
        const double machine = transition_probability(u, w).o1;
        const double quantum =
            trace_probability(density_from_ball_point(w), projector_for_direction(u));
        CHECK(std::abs(machine - quantum) <= 1e-12);
    }
}

TEST_CASE("tensor products") {
    const Spinor2 e0(Complex(1), Complex(0));
    CHECK((tensor_state(e0, e0) - Spinor4(Complex(1), Complex(0), Complex(0), Complex(0)))
              .norm() <= kTol);
    CHECK(detail::max_abs(Operator4(tensor_op(Operator2::Identity(), Operator2::Identity()) -
                                    Operator4::Identity())) <= kTol);

    SplitMix64 g(37);
    for (int i = 0; i < 100; ++i) {
        const Spinor2 a = random_spinor(g);
        const Spinor2 b = random_spinor(g);
        const Operator2 p = projector_for_direction(random_direction(g));
        const Operator2 q = projector_for_direction(random_direction(g));
        const Spinor4 ab = tensor_state(a, b);
        CHECK(std::abs(ab.norm() - 1.0) <= 1e-12);
        const double joint = joint_probability(ab, p, q);
        CHECK(std::abs(joint - born_probability(a, p) * born_probability(b, q)) <= 1e-12);
    }
}

TEST_CASE("singlet state properties") {
    const Spinor4 s = singlet_state();
    CHECK(std::abs(s.norm() - 1.0) <= kTol);
    CHECK(schmidt_rank(s) == 2);
    CHECK(schmidt_rank(tensor_state(spin_state(0.3, 0.7), spin_state(1.1, 2.9))) == 1);

    const Operator2 z_up = projector_for_direction(0, 0);
    CHECK(joint_probability(s, z_up, z_up) <= 1e-12);

    // The four joint outcomes exhaust the possibilities.
    SplitMix64 g(41);
    for (int i = 0; i < 100; ++i) {
        const Operator2 pa = projector_for_direction(random_direction(g));
        const Operator2 pb = projector_for_direction(random_direction(g));
        const Operator2 qa = Operator2::Identity() - pa;
        const Operator2 qb = Operator2::Identity() - pb;
        const double total = joint_probability(s, pa, pb) + joint_probability(s, pa, qb) +
                             joint_probability(s, qa, pb) + joint_probability(s, qa, qb);
        CHECK(std::abs(total - 1.0) <= 1e-12);
    }
}

TEST_CASE("singlet correlations equal minus the inproduct") {
    SplitMix64 g(43);
    for (int i = 0; i < 200; ++i) {
        const Direction a = random_direction(g);
        const Direction b = random_direction(g);
        CHECK(std::abs(singlet_correlation(a, b) + a.vec().dot(b.vec())) <= 1e-12);
    }
}

TEST_CASE("partial traces") {
    // Product state: the marginal is the rank-1 density of the factor.
    const Spinor2 c1 = spin_state(0.4, 5.1);
    const Spinor2 c2 = spin_state(2.2, 1.7);
    const Operator4 rho = density4_of(tensor_state(c1, c2));
    CHECK(detail::max_abs(Eigen::Matrix2cd(partial_trace(rho, Subsystem::first).matrix() -
                                           density_of(c1).matrix())) <= 1e-12);
    CHECK(detail::max_abs(Eigen::Matrix2cd(partial_trace(rho, Subsystem::second).matrix() -
                                           density_of(c2).matrix())) <= 1e-12);

    // Singlet: both marginals are I/2; checked against a hand-rolled
    // index-sum and an eigenvalue decomposition.
    const Operator4 singlet_rho = density4_of(singlet_state());
    for (const Subsystem side : {Subsystem::first, Subsystem::second}) {
        const Density2 marginal = partial_trace(singlet_rho, side);
        Eigen::Matrix2cd by_hand = Eigen::Matrix2cd::Zero();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    by_hand(i, j) += side == Subsystem::first
                                         ? singlet_rho(2 * i + k, 2 * j + k)
                                         : singlet_rho(2 * k + i, 2 * k + j);
        CHECK(detail::max_abs(Eigen::Matrix2cd(marginal.matrix() - by_hand)) <= 1e-15);
        CHECK(detail::max_abs(Eigen::Matrix2cd(marginal.matrix() -
                                               0.5 * Eigen::Matrix2cd::Identity())) <= 1e-12);
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eigs(marginal.matrix());
        CHECK(eigs.eigenvalues()(0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(eigs.eigenvalues()(1) == doctest::Approx(0.5).epsilon(1e-12));
    }

    // Non-product vectors leave genuinely mixed marginals.
    SplitMix64 g(53);
    for (int i = 0; i < 100; ++i) {
        Spinor4 c;
        for (int k = 0; k < 4; ++k)
            c(k) = Complex(2 * g.next_unit() - 1, 2 * g.next_unit() - 1);
        c /= c.norm();
        if (schmidt_rank(c, 1e-3) != 2)
            continue;
        CHECK(partial_trace(density4_of(c), Subsystem::first).min_eigenvalue() > 1e-9);
    }

    CHECK_THROWS_AS(partial_trace(Operator4::Identity(), Subsystem::first), std::domain_error);
    Operator4 not_hermitian = density4_of(singlet_state());
    not_hermitian(0, 1) += Complex(0, 1e-3);
    CHECK_THROWS_AS(partial_trace(not_hermitian, Subsystem::first), std::domain_error);
}

TEST_CASE("positivity check agrees with an eigensolver oracle") {
    SplitMix64 g(47);
    for (int i = 0; i < 300; ++i) {
        Operator4 m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                m(r, c) = Complex(2 * g.next_unit() - 1, 2 * g.next_unit() - 1);
        Operator4 h = m + m.adjoint();
        if (i % 2 == 0)
            h = m.adjoint() * m; // genuinely positive
        const Eigen::SelfAdjointEigenSolver<Operator4> eigs(h);
        const double min_eig = eigs.eigenvalues().minCoeff();
        if (min_eig > 1e-8)
            CHECK(is_positive_semidefinite4(h));
        if (min_eig < -1e-8)
            CHECK(!is_positive_semidefinite4(h));
    }
}

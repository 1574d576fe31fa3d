#pragma once

#include "qmachine/geometry.hpp"
#include "qmachine/machine.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <complex>
#include <stdexcept>

namespace qmachine {

using Complex = std::complex<double>;
using Spinor2 = Eigen::Vector2cd;
using Operator2 = Eigen::Matrix2cd;
using Spinor4 = Eigen::Vector4cd;
using Operator4 = Eigen::Matrix4cd;

/// Computed projections are validated a little more loosely than exact
/// algebraic identities.
inline constexpr double kProjectionTol = 1e-10;

namespace detail {

template <typename Matrix>
double max_abs(const Matrix& m) {
    return m.cwiseAbs().maxCoeff();
}

} // namespace detail

inline bool is_projection(const Operator2& p, double tol = kProjectionTol) {
    return detail::max_abs(Operator2(p * p - p)) <= tol &&
           detail::max_abs(Operator2(p - p.adjoint())) <= tol;
}

inline void require_projection(const Operator2& p) {
    if (!is_projection(p))
        throw std::domain_error("operator is not a projection");
}

/// Unit spinor of the spin state pointing along (theta, phi):
/// (cos(theta/2) e^{-i phi/2}, sin(theta/2) e^{+i phi/2}).
/// This is the +1 eigenvector of projector_for_direction(theta, phi), so
/// born_probability(spin_state(u), projector(u)) = 1 for every direction.
inline Spinor2 spin_state(double theta, double phi) {
    const Complex half_phase = std::polar(1.0, 0.5 * phi);
    return Spinor2(std::cos(0.5 * theta) * std::conj(half_phase),
                   std::sin(0.5 * theta) * half_phase);
}

inline Spinor2 spin_state_for(const Direction& v) {
    const Spherical s = cartesian_to_spherical(v.vec());
    return spin_state(s.theta, s.phi);
}

/// Rank-1 projector of the spin measurement along (alpha, beta):
///   1/2 [[1 + cos a, e^{-i b} sin a], [e^{+i b} sin a, 1 - cos a]].
/// Satisfies P^2 = P, P = P^dagger, tr P = 1 and I - P_u = P_{-u}.
inline Operator2 projector_for_direction(double alpha, double beta) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    const Complex phase = std::polar(1.0, beta);
    Operator2 p;
    p << Complex(0.5 * (1.0 + c), 0.0), 0.5 * s * std::conj(phase),
         0.5 * s * phase,               Complex(0.5 * (1.0 - c), 0.0);
    return p;
}

inline Operator2 projector_for_direction(const Direction& u) {
    const Spherical s = cartesian_to_spherical(u.vec());
    return projector_for_direction(s.theta, s.phi);
}

/// <c, P c> for a unit spinor and a (validated) projection.
inline double born_probability(const Spinor2& c, const Operator2& p) {
    require_projection(p);
    if (std::abs(c.norm() - 1.0) > kTol)
        throw std::domain_error("born_probability: state is not a unit spinor");
    return std::clamp(c.dot(p * c).real(), 0.0, 1.0);
}

/// P c / |P c|. Undefined on the zero-probability branch.
inline Spinor2 collapse(const Spinor2& c, const Operator2& p) {
    require_projection(p);
    const Spinor2 projected = p * c;
    const double sq = projected.squaredNorm();
    if (sq <= kTol)
        throw std::domain_error("collapse: branch has zero probability");
    return projected / std::sqrt(sq);
}

/// A density operator on C^2: self-adjoint, trace 1, positive, all within
/// kTol. Eigenvalues of the 2x2 self-adjoint case come in closed form from
/// trace and determinant.
class Density2 {
public:
    explicit Density2(const Eigen::Matrix2cd& m) : m_(m) {
        if (detail::max_abs(Operator2(m - m.adjoint())) > kTol)
            throw std::domain_error("Density2: matrix is not self-adjoint");
        const double tr = m.trace().real();
        if (std::abs(tr - 1.0) > kTol)
            throw std::domain_error("Density2: trace is not 1");
        const double det = m.determinant().real();
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
        if (0.5 * (tr - disc) < -kTol)
            throw std::domain_error("Density2: matrix is not positive");
    }

    const Eigen::Matrix2cd& matrix() const { return m_; }

    double min_eigenvalue() const {
        const double tr = m_.trace().real();
        const double det = m_.determinant().real();
        return 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
    }

private:
    Eigen::Matrix2cd m_;
};

inline Density2 density_of(const Spinor2& c) {
    return Density2(c * c.adjoint());
}

/// Density operator of a ball point w. Writing w = (l1 - l2) v with |v| = 1
/// and l1 + l2 = 1 gives the convex combination l1 W(v) + l2 W(-v) of the
/// two antipodal rank-1 densities. Surface points give rank-1 operators, the
/// center gives I/2 (independent of the chosen v; v = z-axis here).
inline Density2 density_from_ball_point(const BallPoint& w) {
    const double r = w.vec().norm();
    if (r <= kTol)
        return Density2(0.5 * Eigen::Matrix2cd::Identity());
    const Direction v(Vec3(w.vec() / r));
    const double l1 = 0.5 * (1.0 + r);
    const Spinor2 up = spin_state_for(v);
    const Spinor2 down = spin_state_for(-v);
    return Density2(l1 * (up * up.adjoint()) + (1.0 - l1) * (down * down.adjoint()));
}

/// tr(W P), the outcome probability of the measurement P in the state W.
inline double trace_probability(const Density2& w, const Operator2& p) {
    require_projection(p);
    return (w.matrix() * p).trace().real();
}

inline Spinor4 tensor_state(const Spinor2& a, const Spinor2& b) {
    Spinor4 out;
    out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return out;
}

inline Operator4 tensor_op(const Operator2& a, const Operator2& b) {
    Operator4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

/// The singlet state (0, 1/sqrt2, -1/sqrt2, 0) of two coupled spin-1/2
/// entities. Not expressible as a product of two spinors.
inline Spinor4 singlet_state() {
    const double s = 1.0 / std::numbers::sqrt2;
    return Spinor4(Complex(0), Complex(s), Complex(-s), Complex(0));
}

/// <c, (Pa x Pb) c> for unit c and validated projections.
inline double joint_probability(const Spinor4& c, const Operator2& pa, const Operator2& pb) {
    require_projection(pa);
    require_projection(pb);
    if (std::abs(c.norm() - 1.0) > kTol)
        throw std::domain_error("joint_probability: state is not a unit spinor");
    return c.dot(tensor_op(pa, pb) * c).real();
}

/// Number of nonzero singular values of the 2x2 amplitude matrix of c. Rank
/// 2 means c cannot be reduced to a product state.
inline int schmidt_rank(const Spinor4& c, double tol = 1e-9) {
    Eigen::Matrix2cd amplitudes;
    amplitudes << c(0), c(1), c(2), c(3);
    const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(amplitudes);
    int rank = 0;
    for (int i = 0; i < 2; ++i)
        if (svd.singularValues()(i) > tol)
            ++rank;
    return rank;
}

inline Operator4 density4_of(const Spinor4& c) {
    return c * c.adjoint();
}

/// Positivity of a self-adjoint 4x4 matrix via diagonally pivoted Cholesky
/// with tolerance; no general eigensolver involved. A tiny residual whose
/// diagonal is exhausted must have all entries at the tolerance scale,
/// otherwise the matrix has a negative direction.
inline bool is_positive_semidefinite4(const Operator4& m, double tol = 1e-10) {
    Operator4 a = m;
    std::array<bool, 4> done{false, false, false, false};
    for (int step = 0; step < 4; ++step) {
        int pivot = -1;
        double best = 0.0;
        for (int i = 0; i < 4; ++i) {
            if (!done[i] && a(i, i).real() > best) {
                best = a(i, i).real();
                pivot = i;
            }
        }
        if (pivot < 0)
            break;
        done[pivot] = true;
        for (int i = 0; i < 4; ++i) {
            if (done[i])
                continue;
            for (int j = 0; j < 4; ++j) {
                if (done[j])
                    continue;
                a(i, j) -= a(i, pivot) * a(pivot, j) / best;
            }
        }
        for (int i = 0; i < 4; ++i) {
            if (!done[i]) {
                a(i, pivot) = Complex(0);
                a(pivot, i) = Complex(0);
            }
        }
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!done[i] && !done[j] && std::abs(a(i, j)) > tol)
                return false;
    for (int i = 0; i < 4; ++i)
        if (!done[i] && a(i, i).real() < -tol)
            return false;
    return true;
}

inline bool is_density4(const Operator4& rho, double herm_tol = kTol, double psd_tol = 1e-10) {
    if (detail::max_abs(Operator4(rho - rho.adjoint())) > herm_tol)
        return false;
    if (std::abs(rho.trace().real() - 1.0) > herm_tol || std::abs(rho.trace().imag()) > herm_tol)
        return false;
    return is_positive_semidefinite4(rho, psd_tol);
}

enum class Subsystem { first, second };

/// Reduced density operator of one factor of a C^2 x C^2 density.
inline Density2 partial_trace(const Operator4& rho4, Subsystem which) {
    if (!is_density4(rho4))
        throw std::domain_error("partial_trace: input is not a density operator");
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                out(i, j) += which == Subsystem::first ? rho4(2 * i + k, 2 * j + k)
                                                       : rho4(2 * k + i, 2 * k + j);
    return Density2(out);
}

/// Correlation E(a, b) of the singlet under joint spin measurements along a
/// and b: the signed sum of the four joint outcome probabilities. Equals
/// -<a, b>.
inline double singlet_correlation(const Direction& a, const Direction& b) {
    const Spinor4 c = singlet_state();
    const Operator2 pa = projector_for_direction(a);
    const Operator2 pb = projector_for_direction(b);
    const Operator2 qa = Operator2::Identity() - pa;
    const Operator2 qb = Operator2::Identity() - pb;
    return joint_probability(c, pa, pb) - joint_probability(c, pa, qb) -
           joint_probability(c, qa, pb) + joint_probability(c, qa, qb);
}

} // namespace qmachine

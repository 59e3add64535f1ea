#pragma once

#include <array>
#include <optional>

#include "qflab/quadratic_family.hpp"

namespace qf {

/// Quaternion in the basis (1, i, j, k) of H = R^4.
struct Quat {
    double w = 0, x = 0, y = 0, z = 0;

    Quat conj() const { return {w, -x, -y, -z}; }
};

Quat operator*(const Quat& a, const Quat& b);
Quat operator+(const Quat& a, const Quat& b);

/// Imaginary part of conj(x) * a * x for a purely imaginary quaternion a:
/// the quadratic map R^4 -> R^3 whose norm is |a| |x|^2.
std::array<double, 3> quat_conjugation_map(const std::array<double, 3>& a, const std::array<double, 4>& x);

/// Gram matrix (via polarization) of the form x -> <p, conj(x) a x> for
/// the axis direction p = e_axis. Trace-free with doubled eigenvalues.
SymMatrix gram_direction(const std::array<double, 3>& a, int axis);

/// The three direction matrices for a = i: the standard realization of
/// the trace-free Hermitian 2x2 forms inside Sym(R^4).
std::array<SymMatrix, 3> su2_basis();

struct HopfFamilySpec {
    std::array<double, 3> a{1.0, 0.0, 0.0};
    std::optional<SymMatrix> zeta; // 4x4 perturbation subtracted from the form
    double radius = 1.0;
};

/// Affine family p -> G(p) - zeta over the ball: G(p) the Gram matrix of
/// x -> <p, conj(x) a x>.
QuadraticFamily hopf_family(const HopfFamilySpec& spec);

/// Family H -> S0 + H with H running over the su2_basis span, over the
/// radius-R ball.
QuadraticFamily su2_affine_family(const SymMatrix& S0, double radius);

/// Fixed generic positive-definite perturbation scale * (I + J0): scalar
/// perturbations keep every eigenvalue doubled, which makes the
/// coincidence loci untraceable, so the curve pipeline needs the jitter.
SymMatrix zeta_generic(double scale);

} // namespace qf

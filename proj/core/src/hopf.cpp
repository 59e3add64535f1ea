#include "qflab/hopf.hpp"

#include <cmath>

#include "qflab/errors.hpp"

namespace qf {

Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat operator+(const Quat& a, const Quat& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }

std::array<double, 3> quat_conjugation_map(const std::array<double, 3>& a, const std::array<double, 4>& x) {
    Quat qa{0.0, a[0], a[1], a[2]};
    Quat qx{x[0], x[1], x[2], x[3]};
    Quat r = qx.conj() * qa * qx;
    return {r.x, r.y, r.z};
}

SymMatrix gram_direction(const std::array<double, 3>& a, int axis) {
    auto component = [&](const std::array<double, 4>& x) { return quat_conjugation_map(a, x)[static_cast<std::size_t>(axis)]; };
    auto basis = [](int k) {
        std::array<double, 4> e{0, 0, 0, 0};
        e[static_cast<std::size_t>(k)] = 1.0;
        return e;
    };
    SymMatrix G(4);
    for (int k = 0; k < 4; ++k) G.set(k, k, component(basis(k)));
    for (int k = 0; k < 4; ++k) {
        for (int l = k + 1; l < 4; ++l) {
            std::array<double, 4> s = basis(k);
            s[static_cast<std::size_t>(l)] = 1.0;
            double v = 0.5 * (component(s) - G(k, k) - G(l, l));
            G.set(k, l, v);
        }
    }
    return G;
}

std::array<SymMatrix, 3> su2_basis() {
    std::array<double, 3> a{1.0, 0.0, 0.0};
    return {gram_direction(a, 0), gram_direction(a, 1), gram_direction(a, 2)};
}

QuadraticFamily hopf_family(const HopfFamilySpec& spec) {
    double an = std::sqrt(spec.a[0] * spec.a[0] + spec.a[1] * spec.a[1] + spec.a[2] * spec.a[2]);
    if (!(an > 0.0)) throw precondition_error("hopf_family: a must be a nonzero imaginary quaternion");
    SymMatrix base = SymMatrix::zero(4);
    if (spec.zeta) {
        if (spec.zeta->n() != 4) throw precondition_error("hopf_family: zeta must be 4x4");
        base.add_scaled(*spec.zeta, -1.0);
    }
    std::vector<SymMatrix> dirs;
    for (int axis = 0; axis < 3; ++axis) dirs.push_back(gram_direction(spec.a, axis));
    return QuadraticFamily(ParamDomain::ball(Vec(3, 0.0), spec.radius), std::move(base), std::move(dirs));
}

QuadraticFamily su2_affine_family(const SymMatrix& S0, double radius) {
    if (S0.n() != 4) throw precondition_error("su2_affine_family: S0 must be 4x4");
    auto basis = su2_basis();
    std::vector<SymMatrix> dirs(basis.begin(), basis.end());
    return QuadraticFamily(ParamDomain::ball(Vec(3, 0.0), radius), S0, std::move(dirs));
}

SymMatrix zeta_generic(double scale) {
    // Fixed symmetric jitter with ||J0|| < 1 so I + J0 stays positive
    // definite; constants frozen for reproducibility.
    static const double J0[16] = {
        0.11,  0.05, -0.07,  0.03,
        0.05, -0.04,  0.08, -0.06,
       -0.07,  0.08,  0.02,  0.09,
        0.03, -0.06,  0.09, -0.10};
    SymMatrix z(4);
    for (int i = 0; i < 4; ++i)
        for (int k = i; k < 4; ++k) z.set(i, k, scale * ((i == k ? 1.0 : 0.0) + J0[i * 4 + k]));
    return z;
}

} // namespace qf

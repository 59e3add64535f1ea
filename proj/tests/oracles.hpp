#pragma once

// Test-only oracles, kept independent of the library's solver paths.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "qflab/sym_matrix.hpp"

namespace oracle {

// Characteristic polynomial coefficients by Faddeev-LeVerrier:
// p(x) = x^n + c[n-1] x^{n-1} + ... + c[0].
inline std::vector<double> char_poly(const qf::SymMatrix& S) {
    int n = S.n();
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = 1.0;
    std::vector<double> prev(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) prev[static_cast<std::size_t>(i) * n + i] = 1.0;
    double ck = 0.0;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<double> next(static_cast<std::size_t>(n) * n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double s = 0.0;
                    for (int l = 0; l < n; ++l) s += S(i, l) * prev[static_cast<std::size_t>(l) * n + j];
                    next[static_cast<std::size_t>(i) * n + j] = s;
                }
            for (int i = 0; i < n; ++i) next[static_cast<std::size_t>(i) * n + i] += ck;
            prev = std::move(next);
        }
        double tr = 0.0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) tr += S(i, l) * prev[static_cast<std::size_t>(l) * n + i];
        ck = -tr / k;
        c[static_cast<std::size_t>(n - k)] = ck;
    }
    return c;
}

inline double poly_eval(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
}

// Distinct real roots of a polynomial whose roots are all real, by
// recursive critical-point bracketing and bisection.
inline std::vector<double> real_roots_all_real(const std::vector<double>& c, double lo, double hi) {
    int deg = static_cast<int>(c.size()) - 1;
    while (deg > 0 && c[static_cast<std::size_t>(deg)] == 0.0) --deg;
    if (deg <= 0) return {};
    if (deg == 1) return {-c[0] / c[1]};

    std::vector<double> dc(static_cast<std::size_t>(deg));
    for (int k = 1; k <= deg; ++k) dc[static_cast<std::size_t>(k - 1)] = k * c[static_cast<std::size_t>(k)];
    std::vector<double> crit = real_roots_all_real(dc, lo, hi);
    std::sort(crit.begin(), crit.end());

    std::vector<double> pts = {lo};
    for (double x : crit)
        if (x > lo && x < hi) pts.push_back(x);
    pts.push_back(hi);

    auto bisect = [&](double a, double b) {
        double fa = poly_eval(c, a);
        for (int it = 0; it < 200; ++it) {
            double m = 0.5 * (a + b);
            double fm = poly_eval(c, m);
            if (fm == 0.0) return m;
            if ((fa < 0) != (fm < 0))
                b = m;
            else {
                a = m;
                fa = fm;
            }
        }
        return 0.5 * (a + b);
    };

    double scale = 0.0;
    for (double x : c) scale = std::max(scale, std::abs(x));
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double a = pts[i], b = pts[i + 1];
        double fa = poly_eval(c, a), fb = poly_eval(c, b);
        if ((fa < 0) != (fb < 0))
            roots.push_back(bisect(a, b));
        else if (std::abs(fa) <= 1e-12 * scale)
            roots.push_back(a);
    }
    // Repeated roots sit at critical points where p nearly vanishes.
    for (double x : crit)
        if (std::abs(poly_eval(c, x)) <= 1e-10 * scale * (1.0 + std::abs(x))) roots.push_back(x);
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || std::abs(r - out.back()) > 1e-9 * (1.0 + std::abs(r))) out.push_back(r);
    return out;
}

// Distinct eigenvalues of a symmetric matrix (n <= 4 in practice) from
// the characteristic polynomial, bracketed inside the Gershgorin bound.
inline std::vector<double> distinct_eigenvalues_charpoly(const qf::SymMatrix& S) {
    auto c = char_poly(S);
    double g = 0.0;
    for (int i = 0; i < S.n(); ++i) {
        double row = 0.0;
        for (int j = 0; j < S.n(); ++j) row += std::abs(S(i, j));
        g = std::max(g, row);
    }
    return real_roots_all_real(c, -g - 1.0, g + 1.0);
}

// Multiplicity of eigenvalue r as n - rank(S - rI), rank by Gaussian
// elimination with partial pivoting at a relative tolerance.
inline int eigen_multiplicity(const qf::SymMatrix& S, double r) {
    int n = S.n();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = S(i, j) - (i == j ? r : 0.0);
    double scale = 1.0 + S.max_abs() + std::abs(r);
    int rank = 0;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        double best = 1e-7 * scale;
        for (int i = row; i < n; ++i)
            if (std::abs(a[static_cast<std::size_t>(i) * n + col]) > best) {
                best = std::abs(a[static_cast<std::size_t>(i) * n + col]);
                piv = i;
            }
        if (piv < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(row) * n + j], a[static_cast<std::size_t>(piv) * n + j]);
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            double f = a[static_cast<std::size_t>(i) * n + col] / a[static_cast<std::size_t>(row) * n + col];
            for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] -= f * a[static_cast<std::size_t>(row) * n + j];
        }
        ++row;
        ++rank;
    }
    return n - rank;
}

// Signed linking number of two closed polylines by the Gauss integral,
// evaluated exactly per segment pair as spherical quadrilateral areas
// (van Oosterom-Strackee for the triangle solid angles). Independent of
// the projection-crossing route used by the library.
namespace gauss {

inline std::array<double, 3> unit_diff(const std::vector<double>& p, const std::vector<double>& q) {
    std::array<double, 3> r{p[0] - q[0], p[1] - q[1], p[2] - q[2]};
    double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    return {r[0] / n, r[1] / n, r[2] / n};
}

inline double triangle_solid_angle(const std::array<double, 3>& A, const std::array<double, 3>& B,
                                   const std::array<double, 3>& C) {
    double triple = A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) +
                    A[2] * (B[0] * C[1] - B[1] * C[0]);
    double ab = A[0] * B[0] + A[1] * B[1] + A[2] * B[2];
    double bc = B[0] * C[0] + B[1] * C[1] + B[2] * C[2];
    double ca = C[0] * A[0] + C[1] * A[1] + C[2] * A[2];
    return 2.0 * std::atan2(triple, 1.0 + ab + bc + ca);
}

inline double linking_number(const std::vector<std::vector<double>>& a,
                             const std::vector<std::vector<double>>& b) {
    double omega = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        for (std::size_t j = 0; j + 1 < b.size(); ++j) {
            auto n00 = unit_diff(a[i], b[j]);
            auto n01 = unit_diff(a[i], b[j + 1]);
            auto n11 = unit_diff(a[i + 1], b[j + 1]);
            auto n10 = unit_diff(a[i + 1], b[j]);
            omega += triangle_solid_angle(n00, n01, n11) + triangle_solid_angle(n00, n11, n10);
        }
    }
    return omega / (4.0 * 3.14159265358979323846);
}

} // namespace gauss

} // namespace oracle

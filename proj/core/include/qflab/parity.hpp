#pragma once

#include <vector>

#include "qflab/curve_trace.hpp"
#include "qflab/quadratic_family.hpp"

namespace qf {

/// Parametrized 2-cell in the parameter space: a bilinear quad (corners
/// c00, c10, c01, c11) or an affine triangle. Restricting a bilinear quad
/// to a parameter sub-rectangle is again bilinear in its own corners,
/// which makes recursive quadrisection exact.
struct Cell2 {
    std::vector<Vec> corners;

    static Cell2 quad(const Vec& c00, const Vec& c10, const Vec& c01, const Vec& c11);
    static Cell2 tri(const Vec& a, const Vec& b, const Vec& c);

    bool is_quad() const { return corners.size() == 4; }
    Vec map(double s, double t) const;
    Vec center() const;
    double radius() const;   // max corner distance from the center
    double diameter() const; // max pairwise corner distance
    std::vector<Cell2> quadrisect() const;
};

struct ParityOptions {
    double gap_tol = 1e-8;
    /// Minimum subcell diameter as a fraction of the initial diameter.
    double resolution_frac = 1.0 / 256.0;
    int newton_cap = 30;
};

/// Mod-2 count of transversal crossings of the cell with the coincidence
/// locus lambda_j = lambda_{j+1}. Requires the cell border to stay
/// gap-bounded away from the locus (min gap >= 10 * gap_tol), else
/// precondition_error. Tangential or unresolved crossings raise
/// non_generic_error: the caller is expected to perturb.
int intersection_parity(const QuadraticFamily& F, const Cell2& cell, int j,
                        const ParityOptions& opt = ParityOptions());

} // namespace qf

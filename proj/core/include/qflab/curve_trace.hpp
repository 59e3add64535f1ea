#pragma once

#include <optional>
#include <vector>

#include "qflab/quadratic_family.hpp"

namespace qf {

/// Polyline along the locus lambda_j = lambda_{j+1} in a 3-parameter
/// family. A traced component either closes up or terminates on the
/// domain border (closed xor endpoints_on_boundary).
struct DegeneracyCurve {
    int j = 0;
    std::vector<Vec> points;
    bool closed = false;
    bool endpoints_on_boundary = false;

    double length() const;
};

struct TraceOptions {
    double step = 0.0;           // 0 -> diameter/200
    double gap_tol = 1e-8;
    int max_vertices = 200000;
    int corrector_cap = 20;
    // step halving stops at diameter/1e5; reaching it is a
    // non_generic_error.
};

/// Orthonormal 2-frame spanning the near-degenerate invariant plane of
/// (lambda_j, lambda_{j+1}). Raw eigenvectors are discontinuous at the
/// coincidence; the carried frame keeps the local defining system smooth.
struct DegFrame {
    std::vector<double> a, b;
};

/// Local defining system h(v) = (a^T f_v b, (a^T f_v a - b^T f_v b)/2).
/// With the frame aligned to the invariant plane, gap = 2|h|.
void eval_h(const SymMatrix& f, const DegFrame& fr, double out[2]);

/// Exact 2 x d Jacobian rows of h from the affine directions.
void eval_h_jacobian(const QuadraticFamily& F, const DegFrame& fr, std::vector<double>& row0,
                     std::vector<double>& row1);

/// Re-anchors the frame on the invariant plane of eigenpair (j, j+1) at f,
/// projecting the previous frame and re-orthonormalizing. Falls back to
/// the raw eigenvectors with a deterministic sign fix when the projection
/// degenerates.
DegFrame transport_frame(const EigenData& e, int j, const DegFrame* prev);

/// Gauss-Newton corrector onto {gap_j = 0} starting at v; returns the
/// corrected point or nullopt on divergence. Operates in the ambient
/// space (no domain clamp) so boundary endpoints can be bracketed.
std::optional<Vec> correct_to_locus(const QuadraticFamily& F, int j, Vec v, DegFrame& frame,
                                    const TraceOptions& opt);

/// Grid scan for continuation seeds: local minima of the gap on a
/// grid_res^3 lattice below a Lipschitz-scaled coarse threshold, Newton
/// refined, deduplicated at the step radius. Requires d == 3.
std::vector<Vec> seed_search(const QuadraticFamily& F, int j, int grid_res,
                             const TraceOptions& opt = TraceOptions());

/// Predictor-corrector continuation of the coincidence curve through
/// `seed`. The tangent is the kernel of the 2x3 Jacobian; orientation is
/// kept by sign-matching. Closure: back within step/2 of the start after
/// >= 10 steps with consistent tangent; otherwise both endpoints are
/// driven onto the border to 1e-9.
DegeneracyCurve trace_curve(const QuadraticFamily& F, int j, const Vec& seed,
                            const TraceOptions& opt = TraceOptions());

/// Drives trace_curve from every seed not already within the step radius
/// of a traced curve.
std::vector<DegeneracyCurve> trace_all_curves(const QuadraticFamily& F, int j, int seed_grid_res,
                                              const TraceOptions& opt = TraceOptions());

double point_to_curve_distance(const Vec& p, const DegeneracyCurve& c);

double effective_step(const QuadraticFamily& F, const TraceOptions& opt);

} // namespace qf

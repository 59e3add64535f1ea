#include "qflab/parity.hpp"

#include <algorithm>
#include <cmath>

#include "qflab/errors.hpp"

namespace qf {

Cell2 Cell2::quad(const Vec& c00, const Vec& c10, const Vec& c01, const Vec& c11) {
    Cell2 c;
    c.corners = {c00, c10, c01, c11};
    return c;
}

Cell2 Cell2::tri(const Vec& a, const Vec& b, const Vec& cc) {
    Cell2 c;
    c.corners = {a, b, cc};
    return c;
}

Vec Cell2::map(double s, double t) const {
    if (is_quad()) {
        const Vec &c00 = corners[0], &c10 = corners[1], &c01 = corners[2], &c11 = corners[3];
        Vec p(c00.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] = (1 - s) * (1 - t) * c00[i] + s * (1 - t) * c10[i] + (1 - s) * t * c01[i] + s * t * c11[i];
        return p;
    }
    const Vec &a = corners[0], &b = corners[1], &c = corners[2];
    Vec p(a.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = a[i] + s * (b[i] - a[i]) + t * (c[i] - a[i]);
    return p;
}

Vec Cell2::center() const { return is_quad() ? map(0.5, 0.5) : map(1.0 / 3.0, 1.0 / 3.0); }

double Cell2::radius() const {
    Vec c = center();
    double r = 0.0;
    for (const auto& p : corners) r = std::max(r, dist(p, c));
    return r;
}

double Cell2::diameter() const {
    double m = 0.0;
    for (std::size_t i = 0; i < corners.size(); ++i)
        for (std::size_t k = i + 1; k < corners.size(); ++k) m = std::max(m, dist(corners[i], corners[k]));
    return m;
}

std::vector<Cell2> Cell2::quadrisect() const {
    std::vector<Cell2> out;
    if (is_quad()) {
        Vec m00 = map(0.0, 0.0), m10 = map(1.0, 0.0), m01 = map(0.0, 1.0), m11 = map(1.0, 1.0);
        Vec e0 = map(0.5, 0.0), e1 = map(1.0, 0.5), e2 = map(0.5, 1.0), e3 = map(0.0, 0.5);
        Vec cc = map(0.5, 0.5);
        out.push_back(quad(m00, e0, e3, cc));
        out.push_back(quad(e0, m10, cc, e1));
        out.push_back(quad(e3, cc, m01, e2));
        out.push_back(quad(cc, e1, e2, m11));
    } else {
        const Vec &a = corners[0], &b = corners[1], &c = corners[2];
        Vec ab = map(0.5, 0.0), ac = map(0.0, 0.5), bc = map(0.5, 0.5);
        out.push_back(tri(a, ab, ac));
        out.push_back(tri(ab, b, bc));
        out.push_back(tri(ac, bc, c));
        out.push_back(tri(bc, ac, ab));
    }
    return out;
}

namespace {

struct ParityContext {
    const QuadraticFamily* F;
    int j;
    ParityOptions opt;
    double gap_lip;    // Lipschitz constant of the gap in parameter space
    double resolution; // minimum subcell diameter
    std::vector<Vec> crossings;
    bool unresolved = false;
};

double gap_of(const ParityContext& ctx, const Vec& v) { return gap_at(*ctx.F, v, ctx.j); }

// Certifies min gap >= bound on the straight segment [a,b]; returns false
// when a point with gap < bound is found.
bool certify_segment(const ParityContext& ctx, const Vec& a, const Vec& b, double bound, int depth) {
    Vec mid = 0.5 * (a + b);
    double g = gap_of(ctx, mid);
    double half = 0.5 * dist(a, b);
    if (g - ctx.gap_lip * half >= bound) return true;
    if (depth > 48 || half < 1e-14 * (1.0 + ctx.F->domain().diameter())) {
        return g >= bound && gap_of(ctx, a) >= bound && gap_of(ctx, b) >= bound;
    }
    return certify_segment(ctx, a, mid, bound, depth + 1) && certify_segment(ctx, mid, b, bound, depth + 1);
}

bool boundary_clear(const ParityContext& ctx, const Cell2& cell, double bound) {
    if (cell.is_quad()) {
        return certify_segment(ctx, cell.corners[0], cell.corners[1], bound, 0) &&
               certify_segment(ctx, cell.corners[1], cell.corners[3], bound, 0) &&
               certify_segment(ctx, cell.corners[3], cell.corners[2], bound, 0) &&
               certify_segment(ctx, cell.corners[2], cell.corners[0], bound, 0);
    }
    return certify_segment(ctx, cell.corners[0], cell.corners[1], bound, 0) &&
           certify_segment(ctx, cell.corners[1], cell.corners[2], bound, 0) &&
           certify_segment(ctx, cell.corners[2], cell.corners[0], bound, 0);
}

// Newton on h(map(s,t)) = 0 inside the given subcell; appends the crossing
// (in ambient coordinates) when it converges transversally inside.
void resolve_subcell(ParityContext& ctx, const Cell2& cell) {
    double s = cell.is_quad() ? 0.5 : 1.0 / 3.0;
    double t = s;
    DegFrame frame;
    const double h_tol = ctx.opt.gap_tol / 10.0;
    for (int it = 0; it < ctx.opt.newton_cap; ++it) {
        Vec v = cell.map(s, t);
        SymMatrix f = ctx.F->eval_unchecked(v);
        EigenData e = eigen_sorted(f);
        frame = transport_frame(e, ctx.j, frame.a.empty() ? nullptr : &frame);
        double h[2];
        eval_h(f, frame, h);
        double hn = std::sqrt(h[0] * h[0] + h[1] * h[1]);
        if (hn <= h_tol && gap(e, ctx.j) <= ctx.opt.gap_tol) {
            if (s < -1e-9 || s > 1.0 + 1e-9 || t < -1e-9 || t > 1.0 + 1e-9) return; // another cell's crossing
            ctx.crossings.push_back(v);
            return;
        }
        // Pullback Jacobian: rows of dh/dv times the cell tangents.
        std::vector<double> r0, r1;
        eval_h_jacobian(*ctx.F, frame, r0, r1);
        Vec ds(v.size()), dt(v.size());
        if (cell.is_quad()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                ds[i] = (1 - t) * (cell.corners[1][i] - cell.corners[0][i]) + t * (cell.corners[3][i] - cell.corners[2][i]);
                dt[i] = (1 - s) * (cell.corners[2][i] - cell.corners[0][i]) + s * (cell.corners[3][i] - cell.corners[1][i]);
            }
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) {
                ds[i] = cell.corners[1][i] - cell.corners[0][i];
                dt[i] = cell.corners[2][i] - cell.corners[0][i];
            }
        }
        double a11 = dot(r0, ds), a12 = dot(r0, dt);
        double a21 = dot(r1, ds), a22 = dot(r1, dt);
        double det = a11 * a22 - a12 * a21;
        double scale = std::sqrt((a11 * a11 + a12 * a12) * (a21 * a21 + a22 * a22));
        if (!(std::abs(det) > 1e-10 * (scale + 1e-300))) {
            ctx.unresolved = true; // tangential or degenerate crossing
            return;
        }
        double us = (a22 * h[0] - a12 * h[1]) / det;
        double ut = (a11 * h[1] - a21 * h[0]) / det;
        s -= us;
        t -= ut;
        if (std::abs(s) > 50.0 || std::abs(t) > 50.0) return; // diverged out of the cell
    }
    ctx.unresolved = true;
}

void recurse(ParityContext& ctx, const Cell2& cell) {
    double g = gap_of(ctx, cell.center());
    double r = cell.radius();
    if (g > ctx.gap_lip * r * (1.0 + 1e-12)) return; // certified empty
    if (cell.diameter() <= ctx.resolution) {
        resolve_subcell(ctx, cell);
        return;
    }
    for (const auto& sub : cell.quadrisect()) recurse(ctx, sub);
}

} // namespace

int intersection_parity(const QuadraticFamily& F, const Cell2& cell, int j, const ParityOptions& opt) {
    if (j < 1 || j > F.n() - 1) throw precondition_error("intersection_parity: index out of range");
    if (cell.corners.size() != 3 && cell.corners.size() != 4)
        throw precondition_error("intersection_parity: cell must be a triangle or quad");

    ParityContext ctx;
    ctx.F = &F;
    ctx.j = j;
    ctx.opt = opt;
    ctx.gap_lip = 2.0 * F.lipschitz();
    ctx.resolution = std::max(cell.diameter() * opt.resolution_frac, 1e-13 * (1.0 + F.domain().diameter()));

    if (!boundary_clear(ctx, cell, 10.0 * opt.gap_tol))
        throw precondition_error("intersection_parity: cell border too close to the coincidence locus");

    recurse(ctx, cell);
    if (ctx.unresolved)
        throw non_generic_error("intersection_parity: unresolved subcell at minimum resolution (tangency)");

    // Deduplicate crossings found from adjacent subcells.
    std::vector<Vec> unique;
    for (const auto& p : ctx.crossings) {
        bool dup = false;
        for (const auto& q : unique)
            if (dist(p, q) <= 0.75 * ctx.resolution) {
                dup = true;
                break;
            }
        if (!dup) unique.push_back(p);
    }
    return static_cast<int>(unique.size() % 2);
}

} // namespace qf

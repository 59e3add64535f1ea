#include "qflab/curve_trace.hpp"

#include <algorithm>
#include <cmath>

#include "qflab/errors.hpp"

namespace qf {

namespace {

std::vector<double> mat_vec(const SymMatrix& S, const std::vector<double>& x) {
    int n = S.n();
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += S(i, k) * x[static_cast<std::size_t>(k)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

double bilinear(const std::vector<double>& u, const SymMatrix& S, const std::vector<double>& w) {
    auto sw = mat_vec(S, w);
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * sw[i];
    return s;
}

void sign_fix(std::vector<double>& u) {
    std::size_t imax = 0;
    for (std::size_t i = 1; i < u.size(); ++i)
        if (std::abs(u[i]) > std::abs(u[imax])) imax = i;
    if (u[imax] < 0.0)
        for (auto& x : u) x = -x;
}

void normalize(std::vector<double>& u) {
    double s = 0.0;
    for (double x : u) s += x * x;
    s = std::sqrt(s);
    for (auto& x : u) x /= s;
}

} // namespace

double DegeneracyCurve::length() const {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) len += dist(points[i], points[i + 1]);
    if (closed && points.size() > 1) len += dist(points.back(), points.front());
    return len;
}

void eval_h(const SymMatrix& f, const DegFrame& fr, double out[2]) {
    out[0] = bilinear(fr.a, f, fr.b);
    out[1] = 0.5 * (bilinear(fr.a, f, fr.a) - bilinear(fr.b, f, fr.b));
}

void eval_h_jacobian(const QuadraticFamily& F, const DegFrame& fr, std::vector<double>& row0,
                     std::vector<double>& row1) {
    int d = F.d();
    row0.assign(static_cast<std::size_t>(d), 0.0);
    row1.assign(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < d; ++i) {
        const SymMatrix& A = F.directions()[static_cast<std::size_t>(i)];
        row0[static_cast<std::size_t>(i)] = bilinear(fr.a, A, fr.b);
        row1[static_cast<std::size_t>(i)] = 0.5 * (bilinear(fr.a, A, fr.a) - bilinear(fr.b, A, fr.b));
    }
}

DegFrame transport_frame(const EigenData& e, int j, const DegFrame* prev) {
    std::vector<double> u = e.column(j - 1);
    std::vector<double> w = e.column(j);
    DegFrame out;
    if (prev) {
        double au = dot(prev->a, u), aw = dot(prev->a, w);
        std::vector<double> a = (au * u) + (aw * w);
        double na = norm(a);
        if (na > 1e-8) {
            for (auto& x : a) x /= na;
            double bu = dot(prev->b, u), bw = dot(prev->b, w);
            std::vector<double> b = (bu * u) + (bw * w);
            double ba = dot(b, a);
            for (std::size_t i = 0; i < b.size(); ++i) b[i] -= ba * a[i];
            double nb = norm(b);
            if (nb > 1e-8) {
                for (auto& x : b) x /= nb;
                out.a = std::move(a);
                out.b = std::move(b);
                return out;
            }
            // b collapsed; take the in-plane direction orthogonal to a.
            std::vector<double> b2 = ((-aw) * u) + (au * w);
            normalize(b2);
            out.a = std::move(a);
            out.b = std::move(b2);
            return out;
        }
    }
    sign_fix(u);
    sign_fix(w);
    out.a = std::move(u);
    out.b = std::move(w);
    return out;
}

double effective_step(const QuadraticFamily& F, const TraceOptions& opt) {
    return opt.step > 0.0 ? opt.step : F.domain().diameter() / 200.0;
}

std::optional<Vec> correct_to_locus(const QuadraticFamily& F, int j, Vec v, DegFrame& frame,
                                    const TraceOptions& opt) {
    const double h_tol = opt.gap_tol / 10.0;
    const double diam = F.domain().diameter();
    std::vector<double> r0, r1;
    for (int it = 0; it < opt.corrector_cap; ++it) {
        SymMatrix f = F.eval_unchecked(v);
        EigenData e = eigen_sorted(f);
        frame = transport_frame(e, j, frame.a.empty() ? nullptr : &frame);
        double h[2];
        eval_h(f, frame, h);
        double hn = std::sqrt(h[0] * h[0] + h[1] * h[1]);
        if (hn <= h_tol && gap(e, j) <= opt.gap_tol) return v;
        eval_h_jacobian(F, frame, r0, r1);
        double g11 = dot(r0, r0), g22 = dot(r1, r1), g12 = dot(r0, r1);
        double det = g11 * g22 - g12 * g12;
        if (!(det > 1e-18 * g11 * g22) || !(g11 > 0.0) || !(g22 > 0.0)) return std::nullopt;
        // Minimum-norm Gauss-Newton step: delta = J^T (J J^T)^{-1} h.
        double y0 = (g22 * h[0] - g12 * h[1]) / det;
        double y1 = (g11 * h[1] - g12 * h[0]) / det;
        double step_norm = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            double di = r0[i] * y0 + r1[i] * y1;
            v[i] -= di;
            step_norm += di * di;
        }
        if (std::sqrt(step_norm) > 10.0 * diam) return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Vec> seed_search(const QuadraticFamily& F, int j, int grid_res, const TraceOptions& opt) {
    if (F.d() != 3) throw precondition_error("seed_search: requires a 3-parameter family");
    if (grid_res < 8) throw precondition_error("seed_search: grid_res must be >= 8");
    if (j < 1 || j > F.n() - 1) throw precondition_error("seed_search: index out of range");

    Vec lo, hi;
    F.domain().bounding_box(lo, hi);
    const int m = grid_res;
    Vec h(3);
    for (int a = 0; a < 3; ++a) h[static_cast<std::size_t>(a)] = (hi[static_cast<std::size_t>(a)] - lo[static_cast<std::size_t>(a)]) / m;
    auto coord = [&](int a, int k) { return lo[static_cast<std::size_t>(a)] + (k + 0.5) * h[static_cast<std::size_t>(a)]; };

    const double coarse = 2.0 * F.lipschitz() * norm(h);
    const double max_step = effective_step(F, opt);

    std::vector<double> gaps(static_cast<std::size_t>(m) * m * m, -1.0);
    auto idx = [&](int x, int y, int z) { return (static_cast<std::size_t>(z) * m + y) * m + x; };
    for (int z = 0; z < m; ++z)
        for (int y = 0; y < m; ++y)
            for (int x = 0; x < m; ++x) {
                Vec v = {coord(0, x), coord(1, y), coord(2, z)};
                if (!F.domain().contains(v, 0.0)) continue;
                gaps[idx(x, y, z)] = gap_at(F, v, j);
            }

    std::vector<Vec> seeds;
    for (int z = 0; z < m; ++z)
        for (int y = 0; y < m; ++y)
            for (int x = 0; x < m; ++x) {
                double g = gaps[idx(x, y, z)];
                if (g < 0.0 || g > coarse) continue;
                bool is_min = true;
                const int nb[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
                for (const auto& d : nb) {
                    int xx = x + d[0], yy = y + d[1], zz = z + d[2];
                    if (xx < 0 || yy < 0 || zz < 0 || xx >= m || yy >= m || zz >= m) continue;
                    double gn = gaps[idx(xx, yy, zz)];
                    if (gn >= 0.0 && gn < g) {
                        is_min = false;
                        break;
                    }
                }
                if (!is_min) continue;
                Vec v = {coord(0, x), coord(1, y), coord(2, z)};
                DegFrame frame;
                auto refined = correct_to_locus(F, j, v, frame, opt);
                if (!refined) continue;
                if (!F.domain().contains(*refined, 1e-9 * (1.0 + F.domain().diameter()))) continue;
                bool dup = false;
                for (const auto& s : seeds)
                    if (dist(s, *refined) <= max_step) {
                        dup = true;
                        break;
                    }
                if (!dup) seeds.push_back(*refined);
            }
    return seeds;
}

namespace {

struct LegResult {
    std::vector<Vec> points; // starts at the seed
    bool closed = false;
    // The leg returned to the start in fewer than 10 steps: the component
    // is smaller than the step resolves, retrace with a finer step.
    bool small_closure = false;
};

double point_to_segment(const Vec& p, const Vec& a, const Vec& b) {
    Vec ab = b - a;
    double denom = dot(ab, ab);
    double t = denom > 0.0 ? std::clamp(dot(p - a, ab) / denom, 0.0, 1.0) : 0.0;
    return dist(p, a + (t * ab));
}

Vec kernel_tangent(const QuadraticFamily& F, const DegFrame& frame) {
    std::vector<double> r0, r1;
    eval_h_jacobian(F, frame, r0, r1);
    Vec t = cross3(r0, r1);
    double tn = norm(t);
    double rs = norm(r0) * norm(r1);
    if (!(tn > 1e-10 * (rs + 1e-300)))
        throw non_generic_error("trace_curve: rank-deficient defining system (non-generic family)");
    return (1.0 / tn) * t;
}

LegResult trace_leg(const QuadraticFamily& F, int j, const Vec& start, const DegFrame& start_frame,
                    const Vec& dir0, double step0, const TraceOptions& opt) {
    const double floor_step = F.domain().diameter() / 1e5;
    const double diam = F.domain().diameter();
    const double bnd_tol = 1e-12 * (1.0 + diam);

    LegResult leg;
    leg.points.push_back(start);
    Vec v = start;
    DegFrame frame = start_frame;
    Vec t = dir0;
    double s = step0;
    int steps = 0;

    while (true) {
        if (static_cast<int>(leg.points.size()) > opt.max_vertices)
            throw numerics_error("trace_curve: vertex cap exceeded");
        Vec pred = v + (s * t);
        DegFrame trial_frame = frame;
        auto corrected = correct_to_locus(F, j, pred, trial_frame, opt);
        // A step must land close to the prediction scale: collapsing back
        // onto the same point means the locus is not a curve here.
        bool ok = corrected.has_value() && dist(*corrected, v) <= 1.25 * s + 1e-15 &&
                  dist(*corrected, v) >= 0.2 * s;
        if (!ok) {
            s *= 0.5;
            if (s < floor_step)
                throw non_generic_error("trace_curve: corrector divergence at minimal step");
            continue;
        }
        Vec w = *corrected;

        if (F.domain().boundary_distance(w) < 0.0) {
            // Bracket the border crossing along the prediction length.
            double slo = 0.0, shi = s;
            Vec xlo = v;
            for (int it = 0; it < 80; ++it) {
                double smid = 0.5 * (slo + shi);
                Vec pm = v + (smid * t);
                DegFrame fm = frame;
                auto xm = correct_to_locus(F, j, pm, fm, opt);
                if (!xm) {
                    shi = smid;
                    continue;
                }
                double bd = F.domain().boundary_distance(*xm);
                if (std::abs(bd) <= bnd_tol) {
                    xlo = *xm;
                    break;
                }
                if (bd > 0.0) {
                    slo = smid;
                    xlo = *xm;
                } else {
                    shi = smid;
                }
            }
            if (F.domain().boundary_distance(xlo) > 1e-9 * (1.0 + diam))
                throw numerics_error("trace_curve: border bracketing failed to converge");
            Vec end = F.domain().project_to_boundary(xlo);
            if (dist(end, leg.points.back()) > 1e-14) leg.points.push_back(end);
            leg.closed = false;
            return leg;
        }

        Vec prev = v;
        leg.points.push_back(w);
        ++steps;
        frame = trial_frame;
        Vec tn = kernel_tangent(F, frame);
        if (dot(tn, t) < 0.0) tn = -1.0 * tn;
        t = tn;
        v = w;

        // Closure: the new segment passes within half a step of the start
        // with a consistent tangent. Fewer than 10 steps means the loop is
        // under-resolved; the caller retraces with a halved step.
        if (steps >= 3 && dot(t, dir0) > 0.5 && point_to_segment(start, prev, w) <= 0.5 * s) {
            if (steps >= 10) {
                leg.closed = true;
                return leg;
            }
            leg.small_closure = true;
            return leg;
        }
        s = std::min(1.5 * s, step0);
    }
}

} // namespace

DegeneracyCurve trace_curve(const QuadraticFamily& F, int j, const Vec& seed, const TraceOptions& opt) {
    if (F.d() != 3) throw precondition_error("trace_curve: requires a 3-parameter family");
    if (j < 1 || j > F.n() - 1) throw precondition_error("trace_curve: index out of range");

    Vec v0 = seed;
    DegFrame frame;
    auto refined = correct_to_locus(F, j, v0, frame, opt);
    if (!refined) throw non_generic_error("trace_curve: seed refinement failed");
    v0 = *refined;
    Vec t0 = kernel_tangent(F, frame);

    DegeneracyCurve curve;
    curve.j = j;

    const double floor_step = F.domain().diameter() / 1e5;
    double step0 = effective_step(F, opt);
    while (true) {
        LegResult forward = trace_leg(F, j, v0, frame, t0, step0, opt);
        if (forward.small_closure) {
            step0 *= 0.5;
            if (step0 < floor_step) throw non_generic_error("trace_curve: component below step floor");
            continue;
        }
        if (forward.closed) {
            if (forward.points.size() > 1 && dist(forward.points.back(), v0) < 1e-12) forward.points.pop_back();
            curve.points = std::move(forward.points);
            curve.closed = true;
            curve.endpoints_on_boundary = false;
            return curve;
        }
        LegResult backward = trace_leg(F, j, v0, frame, -1.0 * t0, step0, opt);
        if (backward.small_closure) {
            step0 *= 0.5;
            if (step0 < floor_step) throw non_generic_error("trace_curve: component below step floor");
            continue;
        }
        if (backward.closed)
            throw numerics_error("trace_curve: inconsistent closure (one leg closed, one hit the border)");

        curve.points.assign(backward.points.rbegin(), backward.points.rend());
        curve.points.insert(curve.points.end(), forward.points.begin() + 1, forward.points.end());
        curve.closed = false;
        curve.endpoints_on_boundary = true;
        return curve;
    }
}

double point_to_curve_distance(const Vec& p, const DegeneracyCurve& c) {
    double best = 1e300;
    auto seg = [&](const Vec& a, const Vec& b) {
        Vec ab = b - a;
        double denom = dot(ab, ab);
        double t = denom > 0.0 ? std::clamp(dot(p - a, ab) / denom, 0.0, 1.0) : 0.0;
        best = std::min(best, dist(p, a + (t * ab)));
    };
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i) seg(c.points[i], c.points[i + 1]);
    if (c.closed && c.points.size() > 1) seg(c.points.back(), c.points.front());
    if (c.points.size() == 1) best = std::min(best, dist(p, c.points[0]));
    return best;
}

std::vector<DegeneracyCurve> trace_all_curves(const QuadraticFamily& F, int j, int seed_grid_res,
                                              const TraceOptions& opt) {
    std::vector<Vec> seeds = seed_search(F, j, seed_grid_res, opt);
    const double max_step = effective_step(F, opt);
    std::vector<DegeneracyCurve> curves;
    for (const auto& s : seeds) {
        bool covered = false;
        for (const auto& c : curves)
            if (point_to_curve_distance(s, c) <= max_step) {
                covered = true;
                break;
            }
        if (covered) continue;
        curves.push_back(trace_curve(F, j, s, opt));
    }
    return curves;
}

} // namespace qf

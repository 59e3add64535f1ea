#include "qflab/linking.hpp"

#include <algorithm>
#include <cmath>

#include "qflab/errors.hpp"
#include "qflab/rng.hpp"

namespace qf {

namespace {

double segment_segment_distance(const Vec& p1, const Vec& p2, const Vec& q1, const Vec& q2) {
    // Standard clamped closest-point computation.
    Vec d1 = p2 - p1, d2 = q2 - q1, r = p1 - q1;
    double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
    double s = 0.0, t = 0.0;
    const double eps = 1e-30;
    if (a <= eps && e <= eps) return dist(p1, q1);
    if (a <= eps) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        double c = dot(d1, r);
        if (e <= eps) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            double b = dot(d1, d2);
            double denom = a * e - b * b;
            if (denom > eps) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    Vec cp1 = p1 + (s * d1), cp2 = q1 + (t * d2);
    return dist(cp1, cp2);
}

double polyline_scale(const ClosedPolyline& a, const ClosedPolyline& b) {
    double m = 0.0;
    for (const auto& p : a)
        for (double x : p) m = std::max(m, std::abs(x));
    for (const auto& p : b)
        for (double x : p) m = std::max(m, std::abs(x));
    return 1.0 + m;
}

Vec slerp(const Vec& u, const Vec& w, double t, double theta) {
    double s = std::sin(theta);
    return (std::sin((1.0 - t) * theta) / s) * u + (std::sin(t * theta) / s) * w;
}

} // namespace

double min_separation(const ClosedPolyline& a, const ClosedPolyline& b) {
    double best = 1e300;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t k = 0; k + 1 < b.size(); ++k)
            best = std::min(best, segment_segment_distance(a[i], a[i + 1], b[k], b[k + 1]));
    return best;
}

ClosedPolyline close_relative_curve(const DegeneracyCurve& c, const ParamDomain& ball, double arc_choice) {
    if (ball.kind() != ParamDomain::Kind::Ball)
        throw precondition_error("close_relative_curve: ball domain required");
    if (c.points.size() < 2) throw precondition_error("close_relative_curve: degenerate curve");

    if (c.closed) {
        ClosedPolyline out = c.points;
        if (dist(out.front(), out.back()) > 0.0) out.push_back(out.front());
        return out;
    }
    if (!c.endpoints_on_boundary)
        throw precondition_error("close_relative_curve: open curve without border endpoints");

    const Vec& center = ball.center();
    const double R = ball.radius();
    const double tol = 1e-6 * (1.0 + R);
    Vec pa = c.points.back(), pb = c.points.front(); // arc runs end -> start
    if (std::abs(dist(pa, center) - R) > tol || std::abs(dist(pb, center) - R) > tol)
        throw precondition_error("close_relative_curve: endpoints not on the border sphere");

    Vec u = (1.0 / dist(pa, center)) * (pa - center);
    Vec w = (1.0 / dist(pb, center)) * (pb - center);
    double cosang = std::clamp(dot(u, w), -1.0, 1.0);
    double theta = std::acos(cosang);

    // Arc sampling at roughly the curve's own segment scale.
    double med_seg = 0.0;
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i) med_seg += dist(c.points[i], c.points[i + 1]);
    med_seg /= static_cast<double>(c.points.size() - 1);
    ClosedPolyline out = c.points;

    auto append_arc = [&](const Vec& from, const Vec& to, double ang) {
        if (ang < 1e-12) return;
        int nseg = std::clamp(static_cast<int>(std::ceil(ang * R / std::max(med_seg, 1e-6 * R))), 8, 4096);
        for (int i = 1; i < nseg; ++i) {
            double t = static_cast<double>(i) / nseg;
            out.push_back(center + (R * slerp(from, to, t, ang)));
        }
    };

    if (theta > 3.14159265358979 - 1e-8) {
        // Antipodal endpoints: route through a chosen perpendicular.
        int kmin = 0;
        for (int k = 1; k < 3; ++k)
            if (std::abs(u[static_cast<std::size_t>(k)]) < std::abs(u[static_cast<std::size_t>(kmin)])) kmin = k;
        Vec e(3, 0.0);
        e[static_cast<std::size_t>(kmin)] = 1.0;
        Vec p = e - (dot(e, u) * u);
        p = (1.0 / norm(p)) * p;
        Vec q = cross3(u, p);
        Vec mid = (std::cos(arc_choice) * p) + (std::sin(arc_choice) * q);
        append_arc(u, mid, std::acos(std::clamp(dot(u, mid), -1.0, 1.0)));
        out.push_back(center + (R * mid));
        append_arc(mid, w, std::acos(std::clamp(dot(mid, w), -1.0, 1.0)));
    } else {
        append_arc(u, w, theta);
    }
    out.push_back(out.front());
    return out;
}

PolyLink make_poly_link(const ClosedPolyline& a, const ClosedPolyline& b) {
    PolyLink link;
    link.scale = polyline_scale(a, b);
    if (a.size() < 3 || b.size() < 3) throw precondition_error("make_poly_link: degenerate polyline");
    if (dist(a.front(), a.back()) > 1e-9 * link.scale || dist(b.front(), b.back()) > 1e-9 * link.scale)
        throw precondition_error("make_poly_link: polylines must be closed");
    link.curve_a = a;
    link.curve_b = b;
    link.min_separation = min_separation(a, b);
    if (!(link.min_separation > 1e-7 * link.scale))
        throw non_generic_error("make_poly_link: curves too close for a stable crossing count");
    return link;
}

LinkResult mod2_linking(const PolyLink& link, const LinkOptions& opt) {
    std::uint64_t seed;
    if (opt.seed) {
        seed = *opt.seed;
    } else {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const auto& p : link.curve_a) h = fnv1a(p.data(), p.size() * sizeof(double), h);
        for (const auto& p : link.curve_b) h = fnv1a(p.data(), p.size() * sizeof(double), h);
        seed = h;
    }
    Rng rng(seed);
    const double scale = link.scale;
    const double depth_tol = 1e-9 * scale;

    LinkResult res;
    for (int attempt = 0; attempt < opt.max_tries; ++attempt) {
        Vec wdir = rng.unit_vector(3);
        // Orthonormal screen basis.
        int kmin = 0;
        for (int k = 1; k < 3; ++k)
            if (std::abs(wdir[static_cast<std::size_t>(k)]) < std::abs(wdir[static_cast<std::size_t>(kmin)])) kmin = k;
        Vec e(3, 0.0);
        e[static_cast<std::size_t>(kmin)] = 1.0;
        Vec u = e - (dot(e, wdir) * wdir);
        u = (1.0 / norm(u)) * u;
        Vec v = cross3(wdir, u);

        bool degenerate = false;
        int over = 0;
        ++res.directions_tested;
        for (std::size_t i = 0; i + 1 < link.curve_a.size() && !degenerate; ++i) {
            double ax0 = dot(u, link.curve_a[i]), ay0 = dot(v, link.curve_a[i]);
            double ax1 = dot(u, link.curve_a[i + 1]), ay1 = dot(v, link.curve_a[i + 1]);
            double rx = ax1 - ax0, ry = ay1 - ay0;
            for (std::size_t k = 0; k + 1 < link.curve_b.size(); ++k) {
                double bx0 = dot(u, link.curve_b[k]), by0 = dot(v, link.curve_b[k]);
                double bx1 = dot(u, link.curve_b[k + 1]), by1 = dot(v, link.curve_b[k + 1]);
                double sx = bx1 - bx0, sy = by1 - by0;
                double denom = rx * sy - ry * sx;
                double rlen = std::hypot(rx, ry), slen = std::hypot(sx, sy);
                double qpx = bx0 - ax0, qpy = by0 - ay0;
                if (std::abs(denom) <= 1e-12 * rlen * slen) {
                    // Parallel in projection: degenerate only if the
                    // segments could actually overlap.
                    double cross_gap = std::abs(qpx * ry - qpy * rx);
                    if (cross_gap <= 1e-9 * scale && std::min({std::hypot(bx0 - ax0, by0 - ay0),
                                                               std::hypot(bx1 - ax0, by1 - ay0),
                                                               std::hypot(bx0 - ax1, by0 - ay1)}) <= rlen + slen) {
                        degenerate = true;
                        break;
                    }
                    continue;
                }
                double t = (qpx * sy - qpy * sx) / denom;
                double s2 = (qpx * ry - qpy * rx) / denom;
                if (t < -1e-12 || t > 1.0 + 1e-12 || s2 < -1e-12 || s2 > 1.0 + 1e-12) continue;
                double endpoint_margin = 1e-9;
                if (t < endpoint_margin || t > 1.0 - endpoint_margin || s2 < endpoint_margin ||
                    s2 > 1.0 - endpoint_margin) {
                    degenerate = true;
                    break;
                }
                double za = (1.0 - t) * dot(wdir, link.curve_a[i]) + t * dot(wdir, link.curve_a[i + 1]);
                double zb = (1.0 - s2) * dot(wdir, link.curve_b[k]) + s2 * dot(wdir, link.curve_b[k + 1]);
                if (std::abs(za - zb) <= depth_tol) {
                    degenerate = true;
                    break;
                }
                if (za > zb) ++over;
            }
        }
        if (!degenerate) {
            res.lk_mod2 = over & 1;
            return res;
        }
    }
    throw non_generic_error("mod2_linking: no non-degenerate projection found");
}

int mod2_linking_total(const std::vector<ClosedPolyline>& as, const std::vector<ClosedPolyline>& bs,
                       const LinkOptions& opt) {
    int total = 0;
    for (const auto& a : as)
        for (const auto& b : bs) total ^= mod2_linking(make_poly_link(a, b), opt).lk_mod2;
    return total;
}

} // namespace qf

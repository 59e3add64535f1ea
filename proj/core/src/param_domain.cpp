#include "qflab/param_domain.hpp"

#include <algorithm>
#include <cmath>

#include "qflab/errors.hpp"

namespace qf {

double norm(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dist(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(double c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ParamDomain ParamDomain::box(const Vec& lo, const Vec& hi) {
    if (lo.size() != hi.size() || lo.empty()) throw precondition_error("ParamDomain::box: bad bounds");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < hi[i])) throw precondition_error("ParamDomain::box: need lo < hi per axis");
    ParamDomain p;
    p.kind_ = Kind::Box;
    p.d_ = static_cast<int>(lo.size());
    p.lo_ = lo;
    p.hi_ = hi;
    return p;
}

ParamDomain ParamDomain::ball(const Vec& center, double radius) {
    if (center.empty()) throw precondition_error("ParamDomain::ball: empty center");
    if (!(radius > 0.0)) throw precondition_error("ParamDomain::ball: radius must be > 0");
    ParamDomain p;
    p.kind_ = Kind::Ball;
    p.d_ = static_cast<int>(center.size());
    p.center_ = center;
    p.radius_ = radius;
    return p;
}

ParamDomain ParamDomain::unit_ball(int d) { return ball(Vec(static_cast<std::size_t>(d), 0.0), 1.0); }

double ParamDomain::diameter() const {
    if (kind_ == Kind::Ball) return 2.0 * radius_;
    return dist(lo_, hi_);
}

bool ParamDomain::contains(const Vec& v, double slack) const {
    if (static_cast<int>(v.size()) != d_) return false;
    if (kind_ == Kind::Ball) return dist(v, center_) <= radius_ + slack;
    for (int i = 0; i < d_; ++i)
        if (v[static_cast<std::size_t>(i)] < lo_[static_cast<std::size_t>(i)] - slack ||
            v[static_cast<std::size_t>(i)] > hi_[static_cast<std::size_t>(i)] + slack)
            return false;
    return true;
}

double ParamDomain::boundary_distance(const Vec& v) const {
    if (kind_ == Kind::Ball) return radius_ - dist(v, center_);
    double m = 1e300;
    for (int i = 0; i < d_; ++i) {
        m = std::min(m, v[static_cast<std::size_t>(i)] - lo_[static_cast<std::size_t>(i)]);
        m = std::min(m, hi_[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)]);
    }
    return m;
}

Vec ParamDomain::project_to_boundary(const Vec& v) const {
    if (kind_ == Kind::Ball) {
        Vec u = v - center_;
        double r = norm(u);
        if (r < 1e-300) {
            u.assign(v.size(), 0.0);
            u[0] = radius_;
            return center_ + u;
        }
        return center_ + (radius_ / r) * u;
    }
    // Snap the closest coordinate to its nearest face.
    Vec w = v;
    int best_axis = 0;
    double best = 1e300;
    double snap = 0.0;
    for (int i = 0; i < d_; ++i) {
        double dlo = std::abs(v[static_cast<std::size_t>(i)] - lo_[static_cast<std::size_t>(i)]);
        double dhi = std::abs(hi_[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)]);
        if (dlo < best) { best = dlo; best_axis = i; snap = lo_[static_cast<std::size_t>(i)]; }
        if (dhi < best) { best = dhi; best_axis = i; snap = hi_[static_cast<std::size_t>(i)]; }
    }
    w[static_cast<std::size_t>(best_axis)] = snap;
    return w;
}

void ParamDomain::bounding_box(Vec& lo, Vec& hi) const {
    if (kind_ == Kind::Box) {
        lo = lo_;
        hi = hi_;
        return;
    }
    lo = center_;
    hi = center_;
    for (int i = 0; i < d_; ++i) {
        lo[static_cast<std::size_t>(i)] -= radius_;
        hi[static_cast<std::size_t>(i)] += radius_;
    }
}

} // namespace qf

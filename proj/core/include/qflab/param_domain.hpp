#pragma once

#include <vector>

namespace qf {

using Vec = std::vector<double>;

double norm(const Vec& v);
double dist(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double c, const Vec& a);
double dot(const Vec& a, const Vec& b);
Vec cross3(const Vec& a, const Vec& b);

/// Parameter domain: an axis box or a round ball in R^d.
class ParamDomain {
public:
    enum class Kind { Box, Ball };

    static ParamDomain box(const Vec& lo, const Vec& hi);
    static ParamDomain ball(const Vec& center, double radius);
    static ParamDomain unit_ball(int d);

    Kind kind() const { return kind_; }
    int dim() const { return d_; }
    const Vec& lo() const { return lo_; }
    const Vec& hi() const { return hi_; }
    const Vec& center() const { return center_; }
    double radius() const { return radius_; }

    double diameter() const;
    bool contains(const Vec& v, double slack = 0.0) const;
    /// Signed distance to the border, positive inside.
    double boundary_distance(const Vec& v) const;
    /// Nearest border point (balls: radial; boxes: clamp to closest face).
    Vec project_to_boundary(const Vec& v) const;
    /// Axis-aligned bounding box.
    void bounding_box(Vec& lo, Vec& hi) const;

private:
    Kind kind_ = Kind::Box;
    int d_ = 0;
    Vec lo_, hi_;     // box
    Vec center_;      // ball
    double radius_ = 0.0;
};

} // namespace qf

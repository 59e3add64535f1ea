#include <doctest.h>

#include <cmath>

#include "qflab/errors.hpp"
#include "qflab/hopf.hpp"
#include "qflab/parity.hpp"

using namespace qf;

namespace {

QuadraticFamily disk_family_d2() {
    SymMatrix sz(2), sx(2);
    sz.set(0, 0, 1.0);
    sz.set(1, 1, -1.0);
    sx.set(0, 1, 1.0);
    return QuadraticFamily(ParamDomain::box({-2.0, -2.0}, {2.0, 2.0}), SymMatrix::zero(2), {sz, sx});
}

QuadraticFamily padded_disk_family_d3() {
    SymMatrix sz(2), sx(2);
    sz.set(0, 0, 1.0);
    sz.set(1, 1, -1.0);
    sx.set(0, 1, 1.0);
    return QuadraticFamily(ParamDomain::box({-2.0, -2.0, -2.0}, {2.0, 2.0, 2.0}), SymMatrix::zero(2),
                           {sz, sx, SymMatrix::zero(2)});
}

Cell2 square2(double x0, double y0, double x1, double y1) {
    return Cell2::quad({x0, y0}, {x1, y0}, {x0, y1}, {x1, y1});
}

} // namespace

TEST_CASE("single transversal crossing at the origin") {
    QuadraticFamily F = disk_family_d2();
    CHECK(intersection_parity(F, square2(-1.0, -1.0, 1.0, 1.0), 1) == 1);
}

TEST_CASE("positive-gap cell has parity zero") {
    QuadraticFamily F = disk_family_d2();
    CHECK(intersection_parity(F, square2(0.5, 0.5, 1.5, 1.5), 1) == 0);
}

TEST_CASE("boundary through the locus violates the precondition") {
    QuadraticFamily F = disk_family_d2();
    CHECK_THROWS_AS(intersection_parity(F, square2(0.0, -1.0, 1.0, 1.0), 1), precondition_error);
}

TEST_CASE("parity is additive under quadrisection") {
    QuadraticFamily F = disk_family_d2();
    Cell2 cell = square2(-1.0, -0.8, 1.2, 1.0); // origin strictly inside
    int whole = intersection_parity(F, cell, 1);
    int sum = 0;
    for (const auto& sub : cell.quadrisect()) sum ^= intersection_parity(F, sub, 1);
    CHECK(whole == 1);
    CHECK(sum == whole);
}

TEST_CASE("closed cube surface around the axis has total parity zero") {
    QuadraticFamily F = padded_disk_family_d3();
    // Cube [-a,a]^3: the v3-axis pierces bottom and top faces only.
    double a = 0.7;
    auto face = [&](int axis, double side) {
        // Corners of the face with the given axis fixed at side*a.
        int u = (axis + 1) % 3, w = (axis + 2) % 3;
        Vec c00(3), c10(3), c01(3), c11(3);
        for (Vec* p : {&c00, &c10, &c01, &c11}) (*p)[static_cast<std::size_t>(axis)] = side * a;
        c00[static_cast<std::size_t>(u)] = -a; c00[static_cast<std::size_t>(w)] = -a;
        c10[static_cast<std::size_t>(u)] = a;  c10[static_cast<std::size_t>(w)] = -a;
        c01[static_cast<std::size_t>(u)] = -a; c01[static_cast<std::size_t>(w)] = a;
        c11[static_cast<std::size_t>(u)] = a;  c11[static_cast<std::size_t>(w)] = a;
        return Cell2::quad(c00, c10, c01, c11);
    };
    int total = 0;
    int pierced = 0;
    for (int axis = 0; axis < 3; ++axis)
        for (double side : {-1.0, 1.0}) {
            int p = intersection_parity(F, face(axis, side), 1);
            total ^= p;
            pierced += p;
        }
    CHECK(total == 0);
    CHECK(pierced == 2); // exactly the two axis-piercing faces
}

TEST_CASE("parity is scale invariant") {
    QuadraticFamily F = disk_family_d2();
    QuadraticFamily F2 = F.scaled(2.0);
    Cell2 cell = square2(-1.0, -1.0, 1.0, 1.0);
    CHECK(intersection_parity(F, cell, 1) == intersection_parity(F2, cell, 1));
}

TEST_CASE("small disk transverse to a traced coincidence curve has parity one") {
    HopfFamilySpec spec;
    spec.zeta = zeta_generic(0.1);
    QuadraticFamily F = hopf_family(spec);
    auto curves = trace_all_curves(F, 1, 32);
    REQUIRE(!curves.empty());
    const auto& c = curves[0];
    REQUIRE(c.points.size() > 20);
    std::size_t mid = c.points.size() / 2;
    Vec p = c.points[mid];
    Vec t = c.points[mid + 1] - c.points[mid - 1];
    t = (1.0 / norm(t)) * t;
    // Orthonormal frame transverse to the curve.
    Vec e(3, 0.0);
    int kmin = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(t[static_cast<std::size_t>(k)]) < std::abs(t[static_cast<std::size_t>(kmin)])) kmin = k;
    e[static_cast<std::size_t>(kmin)] = 1.0;
    Vec u = e - (dot(e, t) * t);
    u = (1.0 / norm(u)) * u;
    Vec w = cross3(t, u);
    double h = 0.02;
    Cell2 quad = Cell2::quad(p - (h * u) - (h * w), p + (h * u) - (h * w), p - (h * u) + (h * w),
                             p + (h * u) + (h * w));
    CHECK(intersection_parity(F, quad, 1) == 1);
}

TEST_CASE("triangle cells work") {
    QuadraticFamily F = disk_family_d2();
    Cell2 t = Cell2::tri({-1.0, -1.0}, {1.5, -0.8}, {0.0, 1.3}); // contains origin
    CHECK(intersection_parity(F, t, 1) == 1);
    Cell2 t0 = Cell2::tri({0.5, 0.5}, {1.5, 0.5}, {0.5, 1.5});
    CHECK(intersection_parity(F, t0, 1) == 0);
}

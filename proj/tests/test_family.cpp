#include <doctest.h>

#include <cmath>

#include "qflab/errors.hpp"
#include "qflab/hopf.hpp"
#include "qflab/quadratic_family.hpp"

using namespace qf;

namespace {

QuadraticFamily disk_family(double shift = 0.0, int pad_to_d = 2) {
    SymMatrix sz(2), sx(2);
    sz.set(0, 0, 1.0);
    sz.set(1, 1, -1.0);
    sx.set(0, 1, 1.0);
    SymMatrix base = SymMatrix::identity(2);
    base.scale(-shift);
    std::vector<SymMatrix> dirs = {sz, sx};
    if (pad_to_d == 3) dirs.push_back(SymMatrix::zero(2));
    return QuadraticFamily(ParamDomain::unit_ball(pad_to_d), std::move(base), std::move(dirs));
}

} // namespace

TEST_CASE("family_eval basics") {
    SymMatrix A0 = SymMatrix::diagonal({1.0, 2.0});
    QuadraticFamily F(ParamDomain::box({-1.0}, {3.0}), A0, {SymMatrix::identity(2)});
    SymMatrix at0 = F.eval({0.0});
    CHECK(at0(0, 0) == 1.0);
    CHECK(at0(1, 1) == 2.0);

    QuadraticFamily G(ParamDomain::box({-3.0}, {3.0}), SymMatrix::zero(2), {SymMatrix::identity(2)});
    SymMatrix at2 = G.eval({2.0});
    CHECK(at2(0, 0) == 2.0);
    CHECK(at2(0, 1) == 0.0);

    CHECK_THROWS_AS(G.eval({5.0}), precondition_error);
}

TEST_CASE("hopf family at zero is the zero matrix") {
    HopfFamilySpec spec;
    QuadraticFamily F = hopf_family(spec);
    SymMatrix z = F.eval({0.0, 0.0, 0.0});
    CHECK(z.max_abs() == 0.0);
}

TEST_CASE("lambda_j on constant and disk families") {
    QuadraticFamily C(ParamDomain::unit_ball(2), SymMatrix::diagonal({1.0, -1.0}),
                      {SymMatrix::zero(2), SymMatrix::zero(2)});
    CHECK(lambda_j(C, {0.3, -0.2}, 1) == doctest::Approx(1.0));

    QuadraticFamily D = disk_family();
    // lambda_1 = |v| analytically.
    CHECK(lambda_j(D, {0.6, 0.8}, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lambda_j(D, {0.6, 0.8}, 2) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("hopf minus positive zeta is negative near zero") {
    HopfFamilySpec spec;
    spec.zeta = zeta_generic(0.05);
    QuadraticFamily F = hopf_family(spec);
    CHECK(lambda_j(F, {0.001, 0.0, 0.0}, 1) < 0.0);
    CHECK(lambda_j(F, {0.5, 0.0, 0.0}, 1) > 0.0);
}

TEST_CASE("gap_at matches eigen gap") {
    QuadraticFamily D = disk_family();
    CHECK(gap_at(D, {0.3, 0.4}, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gap_at(D, {0.0, 0.0}, 1) == doctest::Approx(0.0));
}

TEST_CASE("lipschitz bound controls eigenvalue motion") {
    QuadraticFamily D = disk_family();
    double L = D.lipschitz();
    CHECK(L == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    Vec a = {0.1, 0.2}, b = {0.15, 0.18};
    double move = std::abs(lambda_j(D, a, 1) - lambda_j(D, b, 1));
    CHECK(move <= L * dist(a, b) + 1e-12);
}

TEST_CASE("scaled family") {
    QuadraticFamily D = disk_family(0.3);
    QuadraticFamily D2 = D.scaled(2.0);
    CHECK(lambda_j(D2, {0.5, 0.0}, 1) == doctest::Approx(2.0 * lambda_j(D, {0.5, 0.0}, 1)));
}

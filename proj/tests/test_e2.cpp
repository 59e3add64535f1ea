#include <doctest.h>

#include "qflab/e2_page.hpp"
#include "qflab/errors.hpp"
#include "qflab/hopf.hpp"

using namespace qf;

namespace {

QuadraticFamily disk_family(double s) {
    SymMatrix sz(2), sx(2);
    sz.set(0, 0, 1.0);
    sz.set(1, 1, -1.0);
    sx.set(0, 1, 1.0);
    SymMatrix base = SymMatrix::identity(2);
    base.scale(-s);
    return QuadraticFamily(ParamDomain::unit_ball(2), base, {sz, sx});
}

} // namespace

TEST_CASE("disk family page: Z2 at (0,1) and (2,0)") {
    E2Page page = compute_e2(disk_family(0.3), 48);
    CHECK(page.rank(0, 1) == 1);
    CHECK(page.rank(2, 0) == 1);
    CHECK(page.total_rank() == 2);
}

TEST_CASE("constant family on a 3-ball: rank only where the level set is empty") {
    QuadraticFamily F(ParamDomain::unit_ball(3), SymMatrix::diagonal({1.0, -1.0}),
                      {SymMatrix::zero(2), SymMatrix::zero(2), SymMatrix::zero(2)});
    E2Page page = compute_e2(F, 16);
    // j = 0 pairs (B3, B3): all zero; j = 1 pairs (B3, empty): Z2 at i=0.
    CHECK(page.rank(0, 0) == 0);
    CHECK(page.rank(0, 1) == 1);
    CHECK(page.total_rank() == 1);
}

TEST_CASE("box domains carry the same pair ranks as the disk") {
    SymMatrix sz(2), sx(2);
    sz.set(0, 0, 1.0);
    sz.set(1, 1, -1.0);
    sx.set(0, 1, 1.0);
    SymMatrix base = SymMatrix::identity(2);
    base.scale(-0.3);
    QuadraticFamily F(ParamDomain::box({-1.0, -1.0}, {1.0, 1.0}), base, {sz, sx});
    E2Page page = compute_e2(F, 48);
    CHECK(page.rank(0, 1) == 1);
    CHECK(page.rank(2, 0) == 1);
    CHECK(page.total_rank() == 2);
}

TEST_CASE("page is invariant under positive scaling") {
    QuadraticFamily F = disk_family(0.3);
    E2Page a = compute_e2(F, 32);
    E2Page b = compute_e2(F.scaled(2.0), 32);
    CHECK(a == b);
}

TEST_CASE("d2 on the disk family is an isomorphism and E3 vanishes") {
    QuadraticFamily F = disk_family(0.3);
    E2Page page = compute_e2(F, 64);
    DifferentialEntry d2 = compute_d2_degree0(F, page, 1, 64);
    CHECK(d2.si == 0);
    CHECK(d2.sj == 1);
    CHECK(d2.ti == 2);
    CHECK(d2.tj == 0);
    REQUIRE(d2.matrix.rows() == 1);
    REQUIRE(d2.matrix.cols() == 1);
    CHECK(d2.matrix.get(0, 0));

    CollapseReport rep = collapse_report(page, {d2}, {});
    CHECK(rep.total_rank == 0);
    CHECK(rep.complete);
}

TEST_CASE("d2 with an all-open target is the zero map into rank 0") {
    QuadraticFamily F(ParamDomain::unit_ball(3), SymMatrix::diagonal({1.0, -1.0}),
                      {SymMatrix::zero(2), SymMatrix::zero(2), SymMatrix::zero(2)});
    E2Page page = compute_e2(F, 16);
    DifferentialEntry d2 = compute_d2_degree0(F, page, 1, 16);
    CHECK(d2.matrix.cols() == 0); // no admissible target
    CollapseReport rep = collapse_report(page, {d2}, {});
    CHECK(rep.total_rank == 1); // the surviving H^0 generator
    CHECK(rep.complete);
}

TEST_CASE("quaternionic page: every degree-0 d2 is the zero map into rank 0") {
    HopfFamilySpec spec;
    SymMatrix z = SymMatrix::identity(4);
    z.scale(0.3); // large enough that grid 24 resolves the inner void
    spec.zeta = z;
    QuadraticFamily F = hopf_family(spec);
    E2Page page = compute_e2(F, 24);
    CHECK(page.rank(3, 0) == 1);
    CHECK(page.rank(0, 2) == 1);
    CHECK(page.rank(0, 3) == 1);
    for (int j : {2, 3}) {
        DifferentialEntry d2 = compute_d2_degree0(F, page, j, 24);
        CHECK(d2.matrix.rows() == 1);
        CHECK(d2.matrix.cols() == 0); // target H^2(V, V^j) has rank 0
    }
}

TEST_CASE("3-parameter d2 with a cylinder complement target is an isomorphism") {
    // lambda_1 = |(v1,v2)| - s: the open set is the complement of a solid
    // cylinder, H^2(B3, B3 \ cyl) = Z2, and the crossing-parity cocycle of
    // the axis locus is its generator.
    SymMatrix sz(2), sx(2);
    sz.set(0, 0, 1.0);
    sz.set(1, 1, -1.0);
    sx.set(0, 1, 1.0);
    SymMatrix base = SymMatrix::identity(2);
    base.scale(-0.45);
    QuadraticFamily F(ParamDomain::unit_ball(3), base, {sz, sx, SymMatrix::zero(2)});
    E2Page page = compute_e2(F, 20);
    CHECK(page.rank(0, 1) == 1);
    CHECK(page.rank(2, 0) == 1);
    CHECK(page.total_rank() == 2);
    DifferentialEntry d2 = compute_d2_degree0(F, page, 1, 20);
    REQUIRE(d2.matrix.rows() == 1);
    REQUIRE(d2.matrix.cols() == 1);
    CHECK(d2.matrix.get(0, 0));
    CollapseReport rep = collapse_report(page, {d2}, {});
    CHECK(rep.total_rank == 0);
    CHECK(rep.complete);
}

TEST_CASE("d2 precondition violations throw") {
    QuadraticFamily F = disk_family(0.3);
    E2Page page = compute_e2(F, 32);
    CHECK_THROWS_AS(compute_d2_degree0(F, page, 0, 32), precondition_error); // rank(0,0) = 0
}

TEST_CASE("collapse: page with no differentials is final") {
    E2Page page;
    page.n = 2;
    page.d = 2;
    page.ranks = {{0, 1}, {0, 0}, {1, 0}};
    CollapseReport rep = collapse_report(page, {}, {});
    // (0,1) -> (2,0) is in range with positive ranks and no entry: flagged.
    CHECK_FALSE(rep.complete);
    CHECK(rep.total_rank == 2);
    REQUIRE(rep.undetermined.size() == 1);
    CHECK(rep.undetermined[0] == std::pair<int, int>(0, 1));

    // Without a matching target nothing is flagged.
    E2Page lone;
    lone.n = 2;
    lone.d = 2;
    lone.ranks = {{1, 0}, {0, 0}, {0, 0}};
    CollapseReport rep2 = collapse_report(lone, {}, {});
    CHECK(rep2.complete);
    CHECK(rep2.total_rank == 1);
}

TEST_CASE("synthetic d3 bookkeeping") {
    E2Page page;
    page.n = 4;
    page.d = 3;
    page.ranks.assign(4, std::vector<int>(4, 0));
    page.ranks[0][2] = 1;
    page.ranks[0][3] = 1;
    page.ranks[3][0] = 1;
    page.ranks[3][1] = 1;

    auto mk = [](int j, bool nonzero) {
        DifferentialEntry e;
        e.r = 3;
        e.si = 0;
        e.sj = j;
        e.ti = 3;
        e.tj = j - 2;
        e.matrix = Z2Matrix(1, 1);
        e.matrix.set(0, 0, nonzero);
        return e;
    };
    CollapseReport all = collapse_report(page, {}, {mk(2, true), mk(3, true)});
    CHECK(all.total_rank == 0);
    CHECK(all.complete);

    CollapseReport none = collapse_report(page, {}, {mk(2, false), mk(3, false)});
    CHECK(none.total_rank == 4);
    CHECK(none.complete);
}

TEST_CASE("render shows the expected shape") {
    E2Page page;
    page.n = 2;
    page.d = 2;
    page.ranks = {{0, 1}, {0, 0}, {1, 0}};
    std::string s = render_page(page);
    CHECK(s.find("j=1 |   Z2    0    0") != std::string::npos);
    CHECK(s.find("j=0 |    0    0   Z2") != std::string::npos);
}

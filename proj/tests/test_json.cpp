#include <doctest.h>

#include "qflab/errors.hpp"
#include "qflab/json_io.hpp"

using namespace qf;

TEST_CASE("family JSON round trip") {
    SymMatrix sz(2), sx(2);
    sz.set(0, 0, 1.0);
    sz.set(1, 1, -1.0);
    sx.set(0, 1, 0.125);
    QuadraticFamily F(ParamDomain::ball({0.25, -0.5}, 2.0), SymMatrix::diagonal({-0.3, -0.3}), {sz, sx});
    std::string text = write_family(F);
    QuadraticFamily G = load_family(text);
    CHECK(G.n() == 2);
    CHECK(G.domain().kind() == ParamDomain::Kind::Ball);
    CHECK(G.domain().radius() == 2.0);
    CHECK(G.base()(0, 0) == -0.3);
    CHECK(G.directions()[1](0, 1) == 0.125);
    CHECK(write_family(G) == text);

    QuadraticFamily B(ParamDomain::box({-1.0, 0.0}, {1.0, 2.0}), SymMatrix::zero(2), {sz, sx});
    CHECK(load_family(write_family(B)).domain().kind() == ParamDomain::Kind::Box);
}

TEST_CASE("asymmetric matrices are a load error") {
    std::string bad = R"({"n":2,"domain":{"kind":"ball","center":[0,0],"radius":1},
                          "base":[[0,1e-6],[0,0]],"directions":[[[1,0],[0,-1]],[[0,1],[1,0]]]})";
    CHECK_THROWS_AS(load_family(bad), precondition_error);
    // Asymmetry below 1e-12 is averaged, not an error.
    std::string ok = R"({"n":2,"domain":{"kind":"ball","center":[0,0],"radius":1},
                         "base":[[0,1e-13],[0,0]],"directions":[[[1,0],[0,-1]],[[0,1],[1,0]]]})";
    CHECK(load_family(ok).base()(0, 1) == doctest::Approx(5e-14));
}

TEST_CASE("malformed JSON raises precondition_error") {
    CHECK_THROWS_AS(load_family("{not json"), precondition_error);
    CHECK_THROWS_AS(load_curves("[1,2"), precondition_error);
    CHECK_THROWS_AS(load_family(R"({"n":2})"), precondition_error);
}

TEST_CASE("curve JSON round trip, single and list") {
    DegeneracyCurve c;
    c.j = 2;
    c.closed = true;
    c.points = {{0.0, 0.1, 0.2}, {0.3, 0.4, 0.5}, {0.0, 0.25, 1.0 / 3.0}};
    std::string text = write_curves({c}, 2);
    auto back = load_curves(text);
    REQUIRE(back.size() == 1);
    CHECK(back[0].j == 2);
    CHECK(back[0].closed);
    REQUIRE(back[0].points.size() == 3);
    CHECK(back[0].points[2][2] == c.points[2][2]); // 17 digits round-trip

    auto single = load_curves(R"({"j":1,"closed":false,"points":[[0,0,1],[0,0,-1]]})");
    REQUIRE(single.size() == 1);
    CHECK(single[0].endpoints_on_boundary); // defaulted from closed
}

TEST_CASE("page JSON carries sparse ranks and entries") {
    E2Page page;
    page.n = 2;
    page.d = 2;
    page.grid_res = 32;
    page.tol = -1.0;
    page.ranks = {{0, 1}, {0, 0}, {1, 0}};
    DifferentialEntry e;
    e.r = 2;
    e.si = 0;
    e.sj = 1;
    e.ti = 2;
    e.tj = 0;
    e.matrix = Z2Matrix(1, 1);
    e.matrix.set(0, 0, true);
    std::string text = write_page(page, {e}, {});
    CHECK(text.find("\"0,1\":1") != std::string::npos);
    CHECK(text.find("\"2,0\":1") != std::string::npos);
    CHECK(text.find("\"d2\":[{\"r\":2") != std::string::npos);
    CHECK(text.find("\"matrix\":[[1]]") != std::string::npos);
}

TEST_CASE("doubles are serialized with 17 significant digits") {
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(2.0) == "2");
}

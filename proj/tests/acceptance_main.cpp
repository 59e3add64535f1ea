// Acceptance suite: one pass/fail line per criterion. Exit code 0 only if
// every criterion holds at its stated tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qflab/cohomology.hpp"
#include "qflab/experiments.hpp"
#include "qflab/json_io.hpp"

using namespace qf;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

QuadraticFamily hopf_scalar_zeta(double s) {
    HopfFamilySpec spec;
    SymMatrix z = SymMatrix::identity(4);
    z.scale(s);
    spec.zeta = z;
    return hopf_family(spec);
}

bool page_matches_quaternionic_table(const E2Page& page) {
    if (page.n != 4 || page.d != 3) return false;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            int expect = ((i == 3 && (j == 0 || j == 1)) || (i == 0 && (j == 2 || j == 3))) ? 1 : 0;
            if (page.rank(i, j) != expect) return false;
        }
    return true;
}

// 1. Doubled eigenvalue structure of the quaternionic family.
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    QuadraticFamily F = hopf_family(HopfFamilySpec());
    Rng rng(101ULL);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        Vec p = rng.in_unit_ball(3);
        EigenData e = eigen_sorted(F.eval(p));
        ok = std::abs(e.values[0] - e.values[1]) <= 1e-9 && std::abs(e.values[2] - e.values[3]) <= 1e-9 &&
             std::abs(e.values[0] + e.values[3]) <= 1e-9;
    }
    double dt = seconds_since(t0);
    report(1, ok && dt < 1.0,
           "doubled spectra at 1000 random parameters, |l1-l2|,|l3-l4|,|l1+l4| <= 1e-9 (" +
               std::to_string(dt) + " s)");
}

// 2. Norm identity of the quaternionic quadratic map.
void criterion2() {
    Rng rng(202ULL);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        std::array<double, 3> a;
        for (auto& v : a) v = rng.gaussian();
        double an = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
        if (an < 1e-6) continue;
        std::array<double, 4> x;
        for (auto& v : x) v = rng.gaussian();
        double xn2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
        auto phi = quat_conjugation_map(a, x);
        double pn = std::sqrt(phi[0] * phi[0] + phi[1] * phi[1] + phi[2] * phi[2]);
        ok = std::abs(pn - an * xn2) <= 1e-9 * (an * xn2 + 1.0);
    }
    report(2, ok, "|phi(x)| = |a||x|^2 at 1000 random draws, relative error <= 1e-9");
}

// 3. The 4x4 page of the perturbed quaternionic family, stable in grid.
void criterion3() {
    E2Options opt;
    opt.threads = 2;
    QuadraticFamily F = hopf_scalar_zeta(0.05);
    E2Page p64 = compute_e2(F, 64, opt);
    E2Page p48 = compute_e2(F, 48, opt);
    bool ok = page_matches_quaternionic_table(p64) && p64 == p48;
    report(3, ok, "scalar-perturbation page: two Z2 in column i=0, two in column i=3, identical at 48^3 and 64^3");
}

// 4. Nonzero d3 through curve linking; total collapse to zero.
void criterion4() {
    HopfPipelineOptions opt;
    opt.grid_res = 64;
    opt.seed_grid = 32;
    opt.threads = 2;
    HopfPipelineResult res = run_hopf_pipeline(0.05, opt);
    bool curves_ok = !res.curves[0].empty() && !res.curves[1].empty() && !res.curves[2].empty();
    bool d3_ok = res.d3.size() == 2 && res.d3[0].matrix.get(0, 0) && res.d3[1].matrix.get(0, 0);
    bool collapse_ok = res.collapse.complete && res.collapse.total_rank == 0;
    report(4, curves_ok && d3_ok && collapse_ok,
           "traced coincidence curves for j=1,2,3; both d3 linking entries equal 1; total collapsed rank 0");
}

// 5. Ten seeded random offsets: odd linking parities, stable under radius
// doubling.
void criterion5() {
    Prop1Options opt;
    opt.seed_grid = 24;
    bool ok = true;
    std::vector<Prop1Report> base = run_prop1_trials(10, 7, opt);
    for (const auto& r : base)
        ok = ok && r.lk21 == 1 && r.lk23 == 1 && r.nonempty[0] && r.nonempty[1] && r.nonempty[2];
    // Doubled radius, same offsets (same seed stream).
    Prop1Options wide = opt;
    bool ok2 = true;
    for (int t = 0; t < 10 && ok2; ++t) {
        Rng rng(7 + 0x51ab0001ULL * static_cast<std::uint64_t>(t + 1));
        SymMatrix S0 = random_gaussian_sym(4, rng);
        wide.radius = 2.0 * base[static_cast<std::size_t>(t)].radius;
        Prop1Report r = run_prop1(S0, wide.radius, wide);
        ok2 = r.lk21 == base[static_cast<std::size_t>(t)].lk21 && r.lk23 == base[static_cast<std::size_t>(t)].lk23;
    }
    report(5, ok && ok2, "10 random offsets: nonempty curves, parities (1,1), unchanged at doubled radius");
}

// 6. Disk family: d2 isomorphism, vanishing third page, s in {0.3, 0.6}.
void criterion6() {
    bool ok = true;
    for (double s : {0.3, 0.6}) {
        Lemma4Report rep = run_lemma4_disk(s, 64);
        ok = ok && rep.page.rank(0, 1) == 1 && rep.page.rank(2, 0) == 1 && rep.page.total_rank() == 2 &&
             rep.d2.matrix.rows() == 1 && rep.d2.matrix.cols() == 1 && rep.d2.matrix.get(0, 0) &&
             rep.collapse.total_rank == 0 && rep.collapse.complete;
    }
    report(6, ok, "disk family s=0.3, 0.6 at 64^2: d2 is an isomorphism and the third page vanishes");
}

// 7. Property suites.
void criterion7() {
    bool ok = true;
    std::string detail;

    // Eigensolver reconstruction, 1000 random matrices up to n = 8.
    {
        Rng rng(707ULL);
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            int n = 2 + static_cast<int>(rng.next_u64() % 7);
            SymMatrix S(n);
            for (int i = 0; i < n; ++i)
                for (int k = i; k < n; ++k) S.set(i, k, rng.gaussian());
            EigenData e = eigen_sorted(S);
            double worst = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double acc = 0.0;
                    for (int k = 0; k < n; ++k) acc += e.values[static_cast<std::size_t>(k)] * e.vec(i, k) * e.vec(j, k);
                    worst = std::max(worst, std::abs(acc - S(i, j)));
                }
            ok = worst <= 1e-9 * (1.0 + S.max_abs());
        }
        if (!ok) detail = "eigensolver reconstruction";
    }

    // Coboundary-squares-to-zero and the cohomology oracle pairs.
    if (ok) {
        QuadraticFamily neg(ParamDomain::unit_ball(2), SymMatrix::diagonal({-1.0}), {SymMatrix::zero(1), SymMatrix::zero(1)});
        CubicalPair disk_empty = build_cubical_pair(neg, 1, 32, -1.0);

        SymMatrix sz(2), sx(2);
        sz.set(0, 0, 1.0);
        sz.set(1, 1, -1.0);
        sx.set(0, 1, 1.0);
        SymMatrix db = SymMatrix::identity(2);
        db.scale(-0.5);
        QuadraticFamily disk(ParamDomain::unit_ball(2), db, {sz, sx});
        CubicalPair disk_collar = build_cubical_pair(disk, 1, 32, -1.0);

        CubicalPair ball_void = build_cubical_pair(hopf_scalar_zeta(0.25), 1, 32, -1.0);

        ok = disk_empty.coboundary_squares_to_zero() && disk_collar.coboundary_squares_to_zero() &&
             ball_void.coboundary_squares_to_zero();
        if (ok) {
            auto r1 = cohomology_ranks(disk_empty).ranks;
            auto r2 = cohomology_ranks(disk_collar).ranks;
            auto r3 = cohomology_ranks(ball_void).ranks;
            ok = r1 == std::vector<int>{1, 0, 0} && r2 == std::vector<int>{0, 0, 1} &&
                 r3 == std::vector<int>{0, 0, 0, 1};
        }
        if (!ok) detail = "coboundary/oracle pairs";
    }

    // Linking invariances on the two-circle link.
    if (ok) {
        ClosedPolyline a, b;
        for (int i = 0; i <= 96; ++i) {
            double t = 2.0 * 3.14159265358979323846 * i / 96;
            a.push_back({std::cos(t), std::sin(t), 0.0});
            b.push_back({1.0 + std::cos(t), 0.0, std::sin(t)});
        }
        a.back() = a.front();
        b.back() = b.front();
        PolyLink link = make_poly_link(a, b);
        for (std::uint64_t s = 1; s <= 10 && ok; ++s) {
            LinkOptions lopt;
            lopt.seed = 7919 * s;
            ok = mod2_linking(link, lopt).lk_mod2 == 1;
        }
        if (ok) {
            Rng rng(4242ULL);
            ClosedPolyline aj = a, bj = b;
            for (auto* c : {&aj, &bj}) {
                for (std::size_t i = 0; i + 1 < c->size(); ++i)
                    for (auto& x : (*c)[i]) x += 1e-4 * (2.0 * rng.uniform() - 1.0);
                c->back() = c->front();
            }
            ok = mod2_linking(make_poly_link(aj, bj)).lk_mod2 == 1;
        }
        if (ok) {
            auto subdivide = [](const ClosedPolyline& c) {
                ClosedPolyline out;
                for (std::size_t i = 0; i + 1 < c.size(); ++i) {
                    out.push_back(c[i]);
                    out.push_back(0.5 * (c[i] + c[i + 1]));
                }
                out.push_back(c.back());
                return out;
            };
            ok = mod2_linking(make_poly_link(subdivide(a), subdivide(b))).lk_mod2 == 1;
        }
        if (!ok) detail = "linking invariances";
    }

    // Traced-curve residual and step-halving stability.
    if (ok) {
        HopfFamilySpec spec;
        spec.zeta = zeta_generic(0.1);
        QuadraticFamily F = hopf_family(spec);
        auto seeds = seed_search(F, 2, 32);
        ok = !seeds.empty();
        if (ok) {
            TraceOptions coarse;
            coarse.step = 0.02;
            DegeneracyCurve c = trace_curve(F, 2, seeds[0], coarse);
            for (const auto& p : c.points) ok = ok && gap_at(F, p, 2) <= 1e-8;
            TraceOptions fine = coarse;
            fine.step = 0.01;
            DegeneracyCurve cf = trace_curve(F, 2, seeds[0], fine);
            double worst = 0.0;
            for (const auto& p : cf.points) worst = std::max(worst, point_to_curve_distance(p, c));
            for (const auto& p : c.points) worst = std::max(worst, point_to_curve_distance(p, cf));
            ok = ok && worst <= 2.0 * coarse.step;
        }
        if (!ok) detail = "trace residual/stability";
    }

    // Filtration monotonicity on the acceptance families.
    if (ok) {
        auto check_monotone = [&](const QuadraticFamily& F, int res) {
            GridModel grid = make_grid(F.domain(), res);
            VertexTable table = eval_vertices(F, grid, 2);
            CubicalPair prev = build_cubical_pair(grid, table, 1, -1.0);
            for (int j = 2; j <= F.n() + 1; ++j) {
                CubicalPair next = build_cubical_pair(grid, table, j, -1.0);
                for (unsigned m = 0; m < (1u << grid.d); ++m)
                    for (std::size_t b = 0; b < next.sub[m].size(); ++b)
                        if (next.sub[m][b] && !prev.sub[m][b]) return false;
                prev = next;
            }
            return true;
        };
        SymMatrix sz(2), sx(2);
        sz.set(0, 0, 1.0);
        sz.set(1, 1, -1.0);
        sx.set(0, 1, 1.0);
        SymMatrix db = SymMatrix::identity(2);
        db.scale(-0.3);
        QuadraticFamily disk(ParamDomain::unit_ball(2), db, {sz, sx});
        HopfFamilySpec gs;
        gs.zeta = zeta_generic(0.05);
        ok = check_monotone(disk, 48) && check_monotone(hopf_scalar_zeta(0.05), 24) &&
             check_monotone(hopf_family(gs), 24);
        if (!ok) detail = "filtration monotonicity";
    }

    report(7, ok, ok ? "eigensolver, coboundary, oracle pairs, linking invariances, trace stability, monotonicity"
                     : "property suite failed at: " + detail);
}

// 8. Page invariance under doubling the positive perturbation.
void criterion8() {
    E2Options opt;
    opt.threads = 2;
    E2Page a = compute_e2(hopf_scalar_zeta(0.05), 64, opt);
    E2Page b = compute_e2(hopf_scalar_zeta(0.10), 64, opt);
    report(8, a == b, "pages for the 0.05 and 0.10 scalar perturbations agree at 64^3");
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%d criterion(s) failed; total %.1f s\n", g_failures, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}

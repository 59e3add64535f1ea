#include "qflab/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "qflab/errors.hpp"
#include "qflab/parallel.hpp"

namespace qf {

SymMatrix random_gaussian_sym(int n, Rng& rng) {
    // (M + M^T)/2 with independent standard normal entries.
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (auto& v : m) v = rng.gaussian();
    SymMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int k = i; k < n; ++k)
            s.set(i, k, 0.5 * (m[static_cast<std::size_t>(i) * n + k] + m[static_cast<std::size_t>(k) * n + i]));
    return s;
}

Prop1Report run_prop1(const SymMatrix& S0, double radius, const Prop1Options& opt) {
    if (S0.n() != 4) throw precondition_error("run_prop1: S0 must be 4x4");
    double R = radius > 0.0 ? radius : 4.0 * (1.0 + op_norm(S0));
    QuadraticFamily F = su2_affine_family(S0, R);

    Prop1Report rep;
    rep.S0 = S0;
    rep.radius = R;

    std::array<std::vector<DegeneracyCurve>, 3> curves;
    for (int j = 1; j <= 3; ++j) {
        curves[static_cast<std::size_t>(j - 1)] = trace_all_curves(F, j, opt.seed_grid, opt.trace);
        const auto& cs = curves[static_cast<std::size_t>(j - 1)];
        rep.curve_counts[static_cast<std::size_t>(j - 1)] = static_cast<int>(cs.size());
        double len = 0.0;
        for (const auto& c : cs) len += c.length();
        rep.curve_lengths[static_cast<std::size_t>(j - 1)] = len;
        rep.nonempty[static_cast<std::size_t>(j - 1)] = !cs.empty();
    }

    std::vector<ClosedPolyline> c1, c2, c3;
    for (const auto& c : curves[0]) c1.push_back(close_relative_curve(c, F.domain()));
    for (const auto& c : curves[1]) c2.push_back(close_relative_curve(c, F.domain()));
    for (const auto& c : curves[2]) c3.push_back(close_relative_curve(c, F.domain()));
    rep.lk21 = mod2_linking_total(c2, c1, opt.link);
    rep.lk23 = mod2_linking_total(c2, c3, opt.link);
    return rep;
}

std::vector<Prop1Report> run_prop1_trials(int trials, std::uint64_t seed, const Prop1Options& opt,
                                          int max_resamples) {
    std::vector<Prop1Report> reports(static_cast<std::size_t>(std::max(trials, 0)));
    // Independent stream per trial: resampling in one trial does not shift
    // the others, and the trial loop can run concurrently with results
    // written by index.
    parallel_for(static_cast<std::size_t>(std::max(trials, 0)), opt.threads, [&](std::size_t t) {
        Rng rng(seed + 0x51ab0001ULL * static_cast<std::uint64_t>(t + 1));
        int resamples = 0;
        for (;;) {
            SymMatrix S0 = random_gaussian_sym(4, rng);
            try {
                Prop1Report rep = run_prop1(S0, opt.radius, opt);
                rep.resamples = resamples;
                rep.seed = seed;
                rep.trial = static_cast<std::uint64_t>(t);
                reports[t] = std::move(rep);
                break;
            } catch (const non_generic_error&) {
                if (++resamples > max_resamples) throw;
            }
        }
    });
    return reports;
}

Lemma4Report run_lemma4_disk(double s, int grid_res, const Lemma4Options& opt) {
    if (!(s > 0.0 && s < 1.0)) throw precondition_error("run_lemma4_disk: s must be in (0,1)");

    SymMatrix sz(2), sx(2);
    sz.set(0, 0, 1.0);
    sz.set(1, 1, -1.0);
    sx.set(0, 1, 1.0);
    SymMatrix base = SymMatrix::identity(2);
    base.scale(-s);
    QuadraticFamily F(ParamDomain::unit_ball(2), base, {sz, sx});

    E2Options eopt;
    eopt.tol = opt.tol;
    eopt.threads = opt.threads;
    Lemma4Report rep;
    rep.page = compute_e2(F, grid_res, eopt);
    if (opt.refinement_check) {
        int finer = (grid_res * 3 + 1) / 2;
        E2Page check = compute_e2(F, finer, eopt);
        if (!(rep.page == check))
            throw numerics_error("run_lemma4_disk: page ranks changed under grid refinement (under-resolved)");
    }

    D2Options dopt;
    dopt.threads = opt.threads;
    dopt.tol = opt.tol;
    rep.d2 = compute_d2_degree0(F, rep.page, 1, grid_res, dopt);
    rep.collapse = collapse_report(rep.page, {rep.d2}, {});
    return rep;
}

HopfPipelineResult run_hopf_pipeline(double zeta_scale, const HopfPipelineOptions& opt) {
    if (!(zeta_scale > 0.0 && zeta_scale < 0.5))
        throw precondition_error("run_hopf_pipeline: zeta scale must be in (0, 0.5)");

    HopfPipelineResult res;
    res.zeta = zeta_generic(zeta_scale);
    HopfFamilySpec spec;
    spec.zeta = res.zeta;
    QuadraticFamily F = hopf_family(spec);

    E2Options eopt;
    eopt.tol = opt.tol;
    eopt.threads = opt.threads;
    res.page = compute_e2(F, opt.grid_res, eopt);
    // The d3 hypotheses need the rank-one pattern; losing it at small
    // zeta means the grid cannot see the inner void (its radius scales
    // with zeta, so grid_res must grow like sqrt(3)/zeta_scale).
    if (res.page.rank(0, 2) != 1 || res.page.rank(0, 3) != 1 || res.page.rank(3, 0) != 1 ||
        res.page.rank(3, 1) != 1)
        throw numerics_error(
            "run_hopf_pipeline: page lacks the rank-one pattern; the grid is too coarse for this zeta "
            "scale, increase grid_res");

    for (int j = 1; j <= 3; ++j)
        res.curves[static_cast<std::size_t>(j - 1)] = trace_all_curves(F, j, opt.seed_grid, opt.trace);

    res.d3.push_back(compute_d3_linking(F, res.page, 2, res.curves[1], res.curves[0], opt.link));
    res.d3.push_back(compute_d3_linking(F, res.page, 3, res.curves[2], res.curves[1], opt.link));
    res.collapse = collapse_report(res.page, {}, res.d3);
    return res;
}

} // namespace qf

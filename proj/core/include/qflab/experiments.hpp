#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qflab/e2_page.hpp"
#include "qflab/hopf.hpp"
#include "qflab/rng.hpp"

namespace qf {

struct Prop1Options {
    double radius = 0.0; // <= 0: default rule 4 * (1 + ||S0||_op)
    int seed_grid = 24;
    TraceOptions trace;
    LinkOptions link;
    int threads = 1;
};

/// One coincidence-linking experiment over S0 + su(2) directions: traces
/// the three coincidence curves in the ball and links the middle one
/// against its neighbors.
struct Prop1Report {
    SymMatrix S0;
    double radius = 0.0;
    std::array<int, 3> curve_counts{};       // per j = 1, 2, 3
    std::array<double, 3> curve_lengths{};
    std::array<bool, 3> nonempty{};
    int lk21 = 0; // lk(C2, C1) mod 2
    int lk23 = 0; // lk(C2, C3) mod 2
    int resamples = 0;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
};

Prop1Report run_prop1(const SymMatrix& S0, double radius, const Prop1Options& opt = Prop1Options());

/// Seeded trial harness: Gaussian S0 per trial, resampling on non-generic
/// failures at most max_resamples times.
std::vector<Prop1Report> run_prop1_trials(int trials, std::uint64_t seed,
                                          const Prop1Options& opt = Prop1Options(), int max_resamples = 3);

SymMatrix random_gaussian_sym(int n, Rng& rng);

/// The trace-free disk family q -> q - s (n = 2) on the unit operator-norm
/// disk, with the degree-0 d2 and the resulting third-page ranks.
struct Lemma4Report {
    E2Page page;
    DifferentialEntry d2;
    CollapseReport collapse;
};

struct Lemma4Options {
    int threads = 1;
    double tol = -1.0;
    /// Ranks are recomputed at ceil(1.5 * grid_res); disagreement means
    /// the annulus is under-resolved and raises numerics_error.
    bool refinement_check = true;
};

Lemma4Report run_lemma4_disk(double s, int grid_res, const Lemma4Options& opt = Lemma4Options());

/// Full quaternionic pipeline: page, coincidence curves for j = 1, 2, 3,
/// both d3 linking entries, and the collapse summary. Uses the generic
/// perturbation zeta_generic(zeta_scale) throughout.
struct HopfPipelineResult {
    E2Page page;
    std::array<std::vector<DegeneracyCurve>, 3> curves; // index j-1
    std::vector<DifferentialEntry> d3;
    CollapseReport collapse;
    SymMatrix zeta;
};

struct HopfPipelineOptions {
    int grid_res = 64;
    int seed_grid = 32;
    int threads = 1;
    double tol = -1.0;
    TraceOptions trace;
    LinkOptions link;
};

HopfPipelineResult run_hopf_pipeline(double zeta_scale, const HopfPipelineOptions& opt = HopfPipelineOptions());

} // namespace qf

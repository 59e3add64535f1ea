// qflab: eigenvalue filtrations, coincidence curves, and mod-2 page
// reports for affine families of real symmetric matrices.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qflab/errors.hpp"
#include "qflab/json_io.hpp"

namespace {

void emit(const std::string& text, const std::string& json_out) {
    if (!json_out.empty())
        qf::write_text_file(json_out, text + "\n");
    else
        std::cout << text << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qflab: spectra of affine symmetric-matrix families, coincidence-curve tracing, "
                 "Z2 page and linking reports"};
    app.require_subcommand(1);

    int grid = 64;
    double tol = -1.0;
    double step = 0.0;
    std::string json_out;
    int threads = 1;
    app.add_option("--grid", grid, "cubical grid resolution per axis")->capture_default_str();
    app.add_option("--tol", tol, "zero tolerance (negative -> scale-invariant default)");
    app.add_option("--step", step, "continuation step (0 -> diameter/200)");
    app.add_option("--json-out", json_out, "write the JSON report to a file instead of stdout");
    app.add_option("--threads", threads, "worker thread budget")->capture_default_str();

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "trace the coincidence curves lambda_j = lambda_{j+1}");
    trace_cmd->fallthrough();
    std::string trace_family;
    int trace_j = 1;
    int trace_seed_grid = 24;
    trace_cmd->add_option("family", trace_family, "family JSON file")->required();
    trace_cmd->add_option("--j", trace_j, "coincidence index")->required();
    trace_cmd->add_option("--seed-grid", trace_seed_grid, "seed-search lattice resolution")->capture_default_str();

    // e2
    auto* e2_cmd = app.add_subcommand("e2", "relative cohomology ranks of the eigenvalue filtration");
    e2_cmd->fallthrough();
    std::string e2_family;
    e2_cmd->add_option("family", e2_family, "family JSON file")->required();

    // link
    auto* link_cmd = app.add_subcommand("link", "mod-2 linking parity of two closed curves");
    link_cmd->fallthrough();
    std::string link_a, link_b;
    std::uint64_t link_seed = 0;
    bool link_seed_set = false;
    double link_ball_radius = 0.0;
    link_cmd->add_option("a", link_a, "first curve JSON")->required();
    link_cmd->add_option("b", link_b, "second curve JSON")->required();
    auto* seed_opt = link_cmd->add_option("--seed", link_seed, "projection RNG seed (default: input hash)");
    link_cmd->add_option("--ball-radius", link_ball_radius,
                         "close border-relative curves along the sphere of this radius");

    // prop1
    auto* prop1_cmd = app.add_subcommand("prop1", "seeded linking trials over random symmetric offsets");
    prop1_cmd->fallthrough();
    std::uint64_t prop1_seed = 1;
    int prop1_trials = 1;
    double prop1_radius = 0.0;
    int prop1_seed_grid = 24;
    prop1_cmd->add_option("--seed", prop1_seed, "trial RNG seed")->capture_default_str();
    prop1_cmd->add_option("--trials", prop1_trials, "number of trials")->capture_default_str();
    prop1_cmd->add_option("--radius", prop1_radius, "ball radius (0 -> 4*(1+||S0||))");
    prop1_cmd->add_option("--seed-grid", prop1_seed_grid, "seed-search lattice resolution")->capture_default_str();

    // hopf
    auto* hopf_cmd = app.add_subcommand("hopf", "full quaternionic pipeline: page, curves, d3, collapse");
    hopf_cmd->fallthrough();
    double zeta_scale = 0.05;
    int hopf_seed_grid = 32;
    hopf_cmd->add_option("--zeta-scale", zeta_scale, "perturbation scale")->capture_default_str();
    hopf_cmd->add_option("--seed-grid", hopf_seed_grid, "seed-search lattice resolution")->capture_default_str();

    // lemma4
    auto* lemma4_cmd = app.add_subcommand("lemma4", "trace-free disk family: page, d2, third-page ranks");
    lemma4_cmd->fallthrough();
    double lemma4_s = 0.3;
    lemma4_cmd->add_option("--s", lemma4_s, "shift parameter in (0,1)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    link_seed_set = seed_opt->count() > 0;

    try {
        if (*trace_cmd) {
            qf::QuadraticFamily F = qf::load_family(qf::read_text_file(trace_family));
            qf::TraceOptions topt;
            topt.step = step;
            auto curves = qf::trace_all_curves(F, trace_j, trace_seed_grid, topt);
            emit(qf::write_curves(curves, trace_j), json_out);
        } else if (*e2_cmd) {
            qf::QuadraticFamily F = qf::load_family(qf::read_text_file(e2_family));
            qf::E2Options eopt;
            eopt.tol = tol;
            eopt.threads = threads;
            qf::E2Page page = qf::compute_e2(F, grid, eopt);
            std::cerr << qf::render_page(page);
            emit(qf::write_page(page, {}, {}), json_out);
        } else if (*link_cmd) {
            auto ca = qf::load_curves(qf::read_text_file(link_a));
            auto cb = qf::load_curves(qf::read_text_file(link_b));
            qf::LinkOptions lopt;
            if (link_seed_set) lopt.seed = link_seed;
            // Each file is one cycle (union of its components). Closed
            // components just get their seam duplicated; border-relative
            // ones are closed along the sphere when a radius is supplied.
            auto close = [&](const qf::DegeneracyCurve& c) -> qf::ClosedPolyline {
                if (c.closed) {
                    qf::ClosedPolyline p = c.points;
                    if (qf::dist(p.front(), p.back()) > 0.0) p.push_back(p.front());
                    return p;
                }
                if (!(link_ball_radius > 0.0))
                    throw qf::precondition_error(
                        "link: open curve; pass --ball-radius to close it along the border sphere");
                qf::ParamDomain ball = qf::ParamDomain::ball(qf::Vec(c.points.front().size(), 0.0),
                                                             link_ball_radius);
                return qf::close_relative_curve(c, ball);
            };
            int parity = 0;
            int dirs = 0;
            for (const auto& a : ca)
                for (const auto& b : cb) {
                    auto res = qf::mod2_linking(qf::make_poly_link(close(a), close(b)), lopt);
                    parity ^= res.lk_mod2;
                    dirs = res.directions_tested;
                }
            qf::LinkResult total{parity, dirs};
            emit(qf::write_link_result(total), json_out);
        } else if (*prop1_cmd) {
            qf::Prop1Options popt;
            popt.radius = prop1_radius;
            popt.seed_grid = prop1_seed_grid;
            popt.trace.step = step;
            popt.threads = threads;
            auto reports = qf::run_prop1_trials(prop1_trials, prop1_seed, popt);
            emit(qf::write_prop1_reports(reports), json_out);
        } else if (*hopf_cmd) {
            qf::HopfPipelineOptions hopt;
            hopt.grid_res = grid;
            hopt.seed_grid = hopf_seed_grid;
            hopt.threads = threads;
            hopt.tol = tol;
            hopt.trace.step = step;
            auto res = qf::run_hopf_pipeline(zeta_scale, hopt);
            std::cerr << qf::render_page(res.page);
            emit(qf::write_hopf_pipeline(res), json_out);
        } else if (*lemma4_cmd) {
            qf::Lemma4Options lopt;
            lopt.threads = threads;
            lopt.tol = tol;
            auto rep = qf::run_lemma4_disk(lemma4_s, grid, lopt);
            std::cerr << qf::render_page(rep.page);
            emit(qf::write_lemma4(rep), json_out);
        }
    } catch (const qf::non_generic_error& e) {
        std::cerr << "non-generic input: " << e.what() << "\n";
        return 3;
    } catch (const qf::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include <algorithm>

#include "qflab/e2_page.hpp"
#include "qflab/errors.hpp"

namespace qf {

namespace {

// Params of the straight quad spanned by a grid 2-cell.
Cell2 grid_cell_to_quad(const CubicalPair& pair, const CubicalPair::CellRef& c) {
    int axes[2] = {-1, -1};
    int na = 0;
    for (int a = 0; a < pair.grid.d; ++a)
        if ((c.mask >> a) & 1u) axes[na++] = a;
    Vec c00 = pair.grid.vertex_point(c.base);
    Vec c10 = pair.grid.vertex_point(c.base + pair.grid.stride(axes[0]));
    Vec c01 = pair.grid.vertex_point(c.base + pair.grid.stride(axes[1]));
    Vec c11 = pair.grid.vertex_point(c.base + pair.grid.stride(axes[0]) + pair.grid.stride(axes[1]));
    return Cell2::quad(c00, c10, c01, c11);
}

} // namespace

DifferentialEntry compute_d2_degree0(const QuadraticFamily& F, const E2Page& page, int j, int grid_res,
                                     const D2Options& opt) {
    if (F.d() != 2 && F.d() != 3) throw precondition_error("compute_d2_degree0: parameter dimension must be 2 or 3");
    if (j < 1 || j > page.n - 1) throw precondition_error("compute_d2_degree0: source row out of range");
    if (page.rank(0, j) != 1) throw precondition_error("compute_d2_degree0: source rank H^0 must be 1");

    DifferentialEntry entry;
    entry.r = 2;
    entry.si = 0;
    entry.sj = j;
    entry.ti = 2;
    entry.tj = j - 1;

    GridModel grid = make_grid(F.domain(), grid_res);
    VertexTable table = eval_vertices(F, grid, opt.threads);
    CubicalPair src = build_cubical_pair(grid, table, j + 1, opt.tol);
    if (rank_h0(src) != 1)
        throw precondition_error("compute_d2_degree0: source pair disagrees with the page rank");

    int target_rank = page.rank(2, j - 1);
    if (target_rank == 0) {
        // Map into the zero group; no parity evaluation needed.
        entry.matrix = Z2Matrix(1, 0);
        return entry;
    }
    CubicalPair tgt = build_cubical_pair(grid, table, j, opt.tol);
    ParityOptions popt = opt.parity;

    // Cup of the degree-0 generator with the crossing-parity cocycle: on
    // each relative 2-cell whose front vertex lies outside V^{j+1}, the
    // value is the parity of index-j coincidence crossings.
    const auto& rel2 = tgt.rel_cells[2];
    std::vector<std::uint8_t> c(rel2.size(), 0);
    for (std::size_t k = 0; k < rel2.size(); ++k) {
        std::int64_t front = rel2[k].base;
        bool outside = !src.in_sub(front, 0u);
        if (!outside) continue;
        int p = intersection_parity(F, grid_cell_to_quad(tgt, rel2[k]), j, popt);
        c[k] = static_cast<std::uint8_t>(p);
    }

    // The chopped-off cochain must still be a relative cocycle.
    if (F.d() >= 3) {
        Z2Matrix D2 = coboundary_matrix(tgt, 2);
        std::vector<std::uint8_t> dc(static_cast<std::size_t>(D2.rows()), 0);
        for (int r = 0; r < D2.rows(); ++r) {
            int s = 0;
            for (int col = 0; col < D2.cols(); ++col)
                if (D2.get(r, col) && c[static_cast<std::size_t>(col)]) s ^= 1;
            dc[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(s);
        }
        for (auto b : dc)
            if (b)
                throw non_generic_error(
                    "compute_d2_degree0: parity cochain is not a relative cocycle (crossings inside the "
                    "open subcomplex); perturb the family");
    }

    CohomologyOptions copt;
    copt.want_basis = true;
    CohomologyResult coh = cohomology_ranks(tgt, copt);
    if (coh.ranks[2] != target_rank)
        throw precondition_error("compute_d2_degree0: target pair disagrees with the page rank");
    const auto& basis = coh.basis[2];

    // Express c = sum alpha_k b_k + delta(beta): solve [B | D1] y = c.
    Z2Matrix D1 = coboundary_matrix(tgt, 1);
    int n2 = static_cast<int>(tgt.n_rel(2));
    int n1 = static_cast<int>(tgt.n_rel(1));
    Z2Matrix A(n2, target_rank + n1);
    for (int k = 0; k < target_rank; ++k)
        for (int r = 0; r < n2; ++r)
            if (basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)]) A.set(r, k, true);
    for (int col = 0; col < n1; ++col)
        for (int r = 0; r < n2; ++r)
            if (D1.get(r, col)) A.set(r, target_rank + col, true);
    std::vector<std::uint8_t> rhs(c.begin(), c.end());
    std::vector<std::uint8_t> y;
    if (!A.solve(rhs, y))
        throw numerics_error("compute_d2_degree0: parity cocycle not expressible in the computed basis");

    entry.matrix = Z2Matrix(1, target_rank);
    for (int k = 0; k < target_rank; ++k)
        if (y[static_cast<std::size_t>(k)]) entry.matrix.set(0, k, true);
    return entry;
}

DifferentialEntry compute_d3_linking(const QuadraticFamily& F, const E2Page& page, int j,
                                     const std::vector<DegeneracyCurve>& curves_j,
                                     const std::vector<DegeneracyCurve>& curves_jm1, const LinkOptions& opt) {
    if (F.d() != 3) throw precondition_error("compute_d3_linking: requires a 3-parameter family");
    if (F.domain().kind() != ParamDomain::Kind::Ball)
        throw precondition_error("compute_d3_linking: ball domain required");
    if (j < 2 || j > page.n - 1) throw precondition_error("compute_d3_linking: row out of range");
    if (page.rank(0, j) != 1 || page.rank(3, j - 2) != 1)
        throw precondition_error("compute_d3_linking: rank-one hypotheses violated");

    std::vector<ClosedPolyline> as, bs;
    for (const auto& c : curves_j) as.push_back(close_relative_curve(c, F.domain()));
    for (const auto& c : curves_jm1) bs.push_back(close_relative_curve(c, F.domain()));
    int parity = mod2_linking_total(as, bs, opt);

    DifferentialEntry entry;
    entry.r = 3;
    entry.si = 0;
    entry.sj = j;
    entry.ti = 3;
    entry.tj = j - 2;
    entry.matrix = Z2Matrix(1, 1);
    entry.matrix.set(0, 0, parity != 0);
    return entry;
}

} // namespace qf

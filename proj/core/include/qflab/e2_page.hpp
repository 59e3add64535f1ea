#pragma once

#include <string>
#include <vector>

#include "qflab/cohomology.hpp"
#include "qflab/curve_trace.hpp"
#include "qflab/linking.hpp"
#include "qflab/parity.hpp"
#include "qflab/quadratic_family.hpp"
#include "qflab/z2.hpp"

namespace qf {

/// Ranks of E2_{i,j} = H^i(V, V_f^{j+1}; Z2) for 0 <= i <= d and page rows
/// 0 <= j <= n-1 (row j pairs V with the filtration level j+1).
struct E2Page {
    int n = 0;        // form dimension
    int d = 0;        // parameter dimension
    int grid_res = 0; // provenance
    double tol = -1.0;
    std::vector<std::vector<int>> ranks; // [i][j]

    int rank(int i, int j) const;
    int total_rank() const;
    bool operator==(const E2Page& other) const { return n == other.n && d == other.d && ranks == other.ranks; }
};

struct E2Options {
    double tol = -1.0; // < 0: scale-invariant per-vertex default
    int threads = 1;
    bool use_rank_cache = true; // memoize identical (total, sub) masks
};

/// Builds every column pair (V, V^{j+1}) on a shared vertex eigensolve
/// sweep and records the relative cohomology ranks.
E2Page compute_e2(const QuadraticFamily& F, int grid_res, const E2Options& opt = E2Options());

/// Text rendering, rows j descending, columns i ascending.
std::string render_page(const E2Page& page);

/// Differential of the page between chosen bases: rows index the source
/// basis, columns the target basis. r = 2 maps (i,j) -> (i+2, j-1),
/// r = 3 maps (i,j) -> (i+3, j-2).
struct DifferentialEntry {
    int r = 2;
    int si = 0, sj = 0;
    int ti = 0, tj = 0;
    Z2Matrix matrix;
};

struct D2Options {
    int threads = 1;
    double tol = -1.0;
    ParityOptions parity;
};

/// d2 out of a rank-one degree-0 source at page row j (so V^{j+1} is
/// empty): cup of the H^0 generator with the crossing-parity cocycle of
/// the index-j coincidence locus, evaluated per target 2-cell through the
/// front-vertex rule, then expressed against the computed basis of
/// H^2(V, V^j).
DifferentialEntry compute_d2_degree0(const QuadraticFamily& F, const E2Page& page, int j, int grid_res,
                                     const D2Options& opt = D2Options());

/// d3 under the rank-one hypotheses in a 3-ball, page position (0, j) ->
/// (3, j-2): the total mod-2 linking of the traced index-j and index-(j-1)
/// coincidence cycles (border-relative components closed along the border
/// sphere).
DifferentialEntry compute_d3_linking(const QuadraticFamily& F, const E2Page& page, int j,
                                     const std::vector<DegeneracyCurve>& curves_j,
                                     const std::vector<DegeneracyCurve>& curves_jm1,
                                     const LinkOptions& opt = LinkOptions());

/// Ranks after taking homology with respect to the supplied
/// differentials; positions whose in-range differentials were not
/// supplied (and are outside the implemented degree-0 / rank-one scope)
/// are flagged undetermined.
struct CollapseReport {
    std::vector<std::vector<int>> einf_ranks; // [i][j]
    int total_rank = 0;
    std::vector<std::pair<int, int>> undetermined;
    bool complete = true;
};

CollapseReport collapse_report(const E2Page& page, const std::vector<DifferentialEntry>& d2_entries,
                               const std::vector<DifferentialEntry>& d3_entries);

} // namespace qf

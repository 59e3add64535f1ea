#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qflab/quadratic_family.hpp"

namespace qf {

/// Uniform cubical grid over the domain's bounding box. Vertices sit at
/// cell-center offsets, lo + (k + 1/2) h, which keeps symmetric feature
/// points of the families (the origin, say) away from grid vertices.
/// Ball domains are masked polyhedrally: a top cell belongs to the model
/// iff its center is inside the ball.
struct GridModel {
    ParamDomain domain;
    int d = 0;
    int mv = 0;       // vertices per axis
    Vec lo, hi, h;    // bounding box and spacing

    std::int64_t vertex_slots() const;
    int stride(int axis) const;
    double coord(int axis, int k) const { return lo[static_cast<std::size_t>(axis)] + (k + 0.5) * h[static_cast<std::size_t>(axis)]; }
    Vec vertex_point(std::int64_t base) const;
    void decode(std::int64_t base, int* k) const;
    /// All extent axes must leave room for base+1.
    bool valid_cell(std::int64_t base, unsigned mask) const;
};

GridModel make_grid(const ParamDomain& domain, int grid_res);

/// Eigenvalues of f at every grid vertex (row-major per vertex), plus the
/// per-vertex relative zero tolerance.
struct VertexTable {
    int n = 0;
    std::vector<double> lambdas;  // vertex-major, n values each
    std::vector<double> zero_tol; // default_zero_tol(f_v) per vertex

    double lambda(std::int64_t vid, int j) const { return lambdas[static_cast<std::size_t>(vid) * n + (j - 1)]; }
};

VertexTable eval_vertices(const QuadraticFamily& F, const GridModel& grid, int threads = 1);

/// Cubical model of the pair (V, U): `total` is the domain complex,
/// `sub` the subcomplex of cells whose vertices all satisfy the openness
/// predicate. Both are face-closed by construction. The relative complex
/// (total minus sub) carries the pair cohomology.
class CubicalPair {
public:
    GridModel grid;
    // Membership per extent mask, indexed by base vertex.
    std::array<std::vector<std::uint8_t>, 8> total;
    std::array<std::vector<std::uint8_t>, 8> sub;
    // Relative cells per dimension, ordered (mask asc, base asc), with a
    // dense id lookup per mask.
    struct CellRef {
        std::int64_t base;
        std::uint8_t mask;
    };
    std::array<std::vector<CellRef>, 4> rel_cells;
    std::array<std::vector<std::int32_t>, 8> rel_id; // -1 when absent

    std::array<std::int64_t, 4> n_total{};
    std::array<std::int64_t, 4> n_sub{};

    int dim() const { return grid.d; }
    std::int64_t n_rel(int k) const { return static_cast<std::int64_t>(rel_cells[static_cast<std::size_t>(k)].size()); }
    bool in_total(std::int64_t base, unsigned mask) const { return total[mask][static_cast<std::size_t>(base)] != 0; }
    bool in_sub(std::int64_t base, unsigned mask) const { return sub[mask][static_cast<std::size_t>(base)] != 0; }
    std::int32_t rel_index(std::int64_t base, unsigned mask) const { return rel_id[mask][static_cast<std::size_t>(base)]; }

    /// Relative facet ids of a relative k-cell (k >= 1), sorted.
    void rel_facets(const CellRef& c, std::vector<std::int32_t>& out) const;
    /// Corner vertex ids of a cell.
    void cell_vertices(const CellRef& c, std::vector<std::int64_t>& out) const;

    /// Combinatorial Euler characteristic sum (-1)^k (n_total_k - n_sub_k).
    long long euler_characteristic_cells() const;

    /// Per-cell check that the relative coboundary squares to zero
    /// (exact, bit-level); true complexes always pass because sub is
    /// face-closed.
    bool coboundary_squares_to_zero() const;
};

/// Builds the pair from a per-vertex openness flag.
CubicalPair build_pair_from_predicate(const GridModel& grid, const std::vector<std::uint8_t>& vertex_open);

/// Pair (V, V^j_f) at grid_res: a cell is in `sub` iff lambda_j(f_v) > tol
/// at all of its vertices. tol < 0 selects the scale-invariant per-vertex
/// default. j = n+1 yields the empty subcomplex.
CubicalPair build_cubical_pair(const QuadraticFamily& F, int j, int grid_res, double tol,
                               int threads = 1);

/// Same, reusing a precomputed vertex table (one eigensolve sweep shared
/// across filtration indices).
CubicalPair build_cubical_pair(const GridModel& grid, const VertexTable& table, int j, double tol);

} // namespace qf

#include "qflab/cubical.hpp"

#include <algorithm>
#include <cmath>

#include "qflab/errors.hpp"
#include "qflab/parallel.hpp"

namespace qf {

std::int64_t GridModel::vertex_slots() const {
    std::int64_t s = 1;
    for (int a = 0; a < d; ++a) s *= mv;
    return s;
}

int GridModel::stride(int axis) const {
    int s = 1;
    for (int a = 0; a < axis; ++a) s *= mv;
    return s;
}

Vec GridModel::vertex_point(std::int64_t base) const {
    int k[3] = {0, 0, 0};
    decode(base, k);
    Vec p(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) p[static_cast<std::size_t>(a)] = coord(a, k[a]);
    return p;
}

void GridModel::decode(std::int64_t base, int* k) const {
    for (int a = 0; a < d; ++a) {
        k[a] = static_cast<int>(base % mv);
        base /= mv;
    }
}

bool GridModel::valid_cell(std::int64_t base, unsigned mask) const {
    int k[3] = {0, 0, 0};
    decode(base, k);
    for (int a = 0; a < d; ++a)
        if ((mask >> a) & 1u)
            if (k[a] + 1 > mv - 1) return false;
    return true;
}

GridModel make_grid(const ParamDomain& domain, int grid_res) {
    if (grid_res < 8) throw precondition_error("make_grid: grid_res must be >= 8");
    if (domain.dim() < 1 || domain.dim() > 3) throw precondition_error("make_grid: dimension must be 1..3");
    GridModel g;
    g.domain = domain;
    g.d = domain.dim();
    g.mv = grid_res;
    domain.bounding_box(g.lo, g.hi);
    g.h.resize(static_cast<std::size_t>(g.d));
    for (int a = 0; a < g.d; ++a)
        g.h[static_cast<std::size_t>(a)] = (g.hi[static_cast<std::size_t>(a)] - g.lo[static_cast<std::size_t>(a)]) / grid_res;
    return g;
}

VertexTable eval_vertices(const QuadraticFamily& F, const GridModel& grid, int threads) {
    VertexTable t;
    t.n = F.n();
    std::int64_t nv = grid.vertex_slots();
    t.lambdas.assign(static_cast<std::size_t>(nv) * t.n, 0.0);
    t.zero_tol.assign(static_cast<std::size_t>(nv), 0.0);
    parallel_for(static_cast<std::size_t>(nv), threads, [&](std::size_t vid) {
        SymMatrix f = F.eval_unchecked(grid.vertex_point(static_cast<std::int64_t>(vid)));
        EigenData e = eigen_sorted(f);
        for (int j = 0; j < t.n; ++j) t.lambdas[vid * t.n + static_cast<std::size_t>(j)] = e.values[static_cast<std::size_t>(j)];
        t.zero_tol[vid] = default_zero_tol(f);
    });
    return t;
}

void CubicalPair::rel_facets(const CellRef& c, std::vector<std::int32_t>& out) const {
    out.clear();
    for (int a = 0; a < grid.d; ++a) {
        if (!((c.mask >> a) & 1u)) continue;
        unsigned fmask = c.mask & ~(1u << a);
        std::int64_t b0 = c.base;
        std::int64_t b1 = c.base + grid.stride(a);
        std::int32_t i0 = rel_id[fmask][static_cast<std::size_t>(b0)];
        std::int32_t i1 = rel_id[fmask][static_cast<std::size_t>(b1)];
        if (i0 >= 0) out.push_back(i0);
        if (i1 >= 0) out.push_back(i1);
    }
    std::sort(out.begin(), out.end());
}

void CubicalPair::cell_vertices(const CellRef& c, std::vector<std::int64_t>& out) const {
    out.clear();
    std::vector<int> axes;
    for (int a = 0; a < grid.d; ++a)
        if ((c.mask >> a) & 1u) axes.push_back(a);
    int corners = 1 << axes.size();
    for (int s = 0; s < corners; ++s) {
        std::int64_t v = c.base;
        for (std::size_t i = 0; i < axes.size(); ++i)
            if ((s >> i) & 1) v += grid.stride(axes[i]);
        out.push_back(v);
    }
}

long long CubicalPair::euler_characteristic_cells() const {
    long long chi = 0;
    for (int k = 0; k <= grid.d; ++k) {
        long long diff = n_total[static_cast<std::size_t>(k)] - n_sub[static_cast<std::size_t>(k)];
        chi += (k % 2 == 0) ? diff : -diff;
    }
    return chi;
}

bool CubicalPair::coboundary_squares_to_zero() const {
    // delta(delta(e_sigma)) per relative cell: every coface-of-coface must
    // appear an even number of times.
    std::vector<std::int32_t> hits;
    for (int k = 0; k + 2 <= grid.d; ++k) {
        for (const auto& sigma : rel_cells[static_cast<std::size_t>(k)]) {
            hits.clear();
            for (int a = 0; a < grid.d; ++a) {
                if ((sigma.mask >> a) & 1u) continue;
                unsigned cmask = sigma.mask | (1u << a);
                for (int side = 0; side < 2; ++side) {
                    std::int64_t b = side == 0 ? sigma.base : sigma.base - grid.stride(a);
                    if (b < 0 || !grid.valid_cell(b, cmask)) continue;
                    if (!in_total(b, cmask) || in_sub(b, cmask)) continue;
                    // rho = (b, cmask) is a relative coface; collect its
                    // relative cofaces.
                    for (int a2 = 0; a2 < grid.d; ++a2) {
                        if ((cmask >> a2) & 1u) continue;
                        unsigned tmask = cmask | (1u << a2);
                        for (int side2 = 0; side2 < 2; ++side2) {
                            std::int64_t b2 = side2 == 0 ? b : b - grid.stride(a2);
                            if (b2 < 0 || !grid.valid_cell(b2, tmask)) continue;
                            std::int32_t tid = rel_id[tmask][static_cast<std::size_t>(b2)];
                            if (tid >= 0) hits.push_back(tid);
                        }
                    }
                }
            }
            std::sort(hits.begin(), hits.end());
            for (std::size_t i = 0; i < hits.size();) {
                std::size_t j = i;
                while (j < hits.size() && hits[j] == hits[i]) ++j;
                if ((j - i) % 2 != 0) return false;
                i = j;
            }
        }
    }
    return true;
}

CubicalPair build_pair_from_predicate(const GridModel& grid, const std::vector<std::uint8_t>& vertex_open) {
    CubicalPair p;
    p.grid = grid;
    const int d = grid.d;
    const std::int64_t slots = grid.vertex_slots();
    const unsigned nmasks = 1u << d;

    for (unsigned m = 0; m < 8; ++m) {
        p.total[m].assign(m < nmasks ? static_cast<std::size_t>(slots) : 0, 0);
        p.sub[m].assign(m < nmasks ? static_cast<std::size_t>(slots) : 0, 0);
        p.rel_id[m].assign(m < nmasks ? static_cast<std::size_t>(slots) : 0, -1);
    }

    const unsigned top = nmasks - 1;
    if (grid.domain.kind() == ParamDomain::Kind::Ball) {
        const Vec& c = grid.domain.center();
        double r = grid.domain.radius();
        for (std::int64_t b = 0; b < slots; ++b) {
            if (!grid.valid_cell(b, top)) continue;
            Vec center = grid.vertex_point(b);
            for (int a = 0; a < d; ++a) center[static_cast<std::size_t>(a)] += 0.5 * grid.h[static_cast<std::size_t>(a)];
            double s = 0.0;
            for (int a = 0; a < d; ++a) {
                double dd = center[static_cast<std::size_t>(a)] - c[static_cast<std::size_t>(a)];
                s += dd * dd;
            }
            if (s <= r * r) p.total[top][static_cast<std::size_t>(b)] = 1;
        }
    } else {
        for (std::int64_t b = 0; b < slots; ++b)
            if (grid.valid_cell(b, top)) p.total[top][static_cast<std::size_t>(b)] = 1;
    }

    // Face closure, top dimension downward.
    for (int k = d; k >= 1; --k) {
        for (unsigned m = 0; m < nmasks; ++m) {
            if (__builtin_popcount(m) != k) continue;
            for (std::int64_t b = 0; b < slots; ++b) {
                if (!p.total[m][static_cast<std::size_t>(b)]) continue;
                for (int a = 0; a < d; ++a) {
                    if (!((m >> a) & 1u)) continue;
                    unsigned fm = m & ~(1u << a);
                    p.total[fm][static_cast<std::size_t>(b)] = 1;
                    p.total[fm][static_cast<std::size_t>(b + grid.stride(a))] = 1;
                }
            }
        }
    }

    // Openness rule: a cell is in sub iff all of its corner vertices pass.
    std::vector<std::int64_t> corners;
    for (unsigned m = 0; m < nmasks; ++m) {
        for (std::int64_t b = 0; b < slots; ++b) {
            if (!p.total[m][static_cast<std::size_t>(b)]) continue;
            CubicalPair::CellRef ref{b, static_cast<std::uint8_t>(m)};
            p.cell_vertices(ref, corners);
            bool all_open = true;
            for (auto v : corners)
                if (!vertex_open[static_cast<std::size_t>(v)]) {
                    all_open = false;
                    break;
                }
            if (all_open) p.sub[m][static_cast<std::size_t>(b)] = 1;
        }
    }

    // Counts and relative enumeration, deterministic (mask asc, base asc).
    for (int k = 0; k <= d; ++k) {
        auto& cells = p.rel_cells[static_cast<std::size_t>(k)];
        for (unsigned m = 0; m < nmasks; ++m) {
            if (__builtin_popcount(m) != k) continue;
            for (std::int64_t b = 0; b < slots; ++b) {
                if (!p.total[m][static_cast<std::size_t>(b)]) continue;
                ++p.n_total[static_cast<std::size_t>(k)];
                if (p.sub[m][static_cast<std::size_t>(b)]) {
                    ++p.n_sub[static_cast<std::size_t>(k)];
                    continue;
                }
                p.rel_id[m][static_cast<std::size_t>(b)] = static_cast<std::int32_t>(cells.size());
                cells.push_back({b, static_cast<std::uint8_t>(m)});
            }
        }
    }
    return p;
}

CubicalPair build_cubical_pair(const GridModel& grid, const VertexTable& table, int j, double tol) {
    std::int64_t nv = grid.vertex_slots();
    std::vector<std::uint8_t> open(static_cast<std::size_t>(nv), 0);
    if (j >= 1 && j <= table.n) {
        for (std::int64_t v = 0; v < nv; ++v) {
            double t = tol >= 0.0 ? tol : table.zero_tol[static_cast<std::size_t>(v)];
            open[static_cast<std::size_t>(v)] = table.lambda(v, j) > t ? 1 : 0;
        }
    }
    // j > n: lambda_j does not exist, the filtration level is empty.
    return build_pair_from_predicate(grid, open);
}

CubicalPair build_cubical_pair(const QuadraticFamily& F, int j, int grid_res, double tol, int threads) {
    if (j < 1 || j > F.n() + 1) throw precondition_error("build_cubical_pair: index out of range");
    GridModel grid = make_grid(F.domain(), grid_res);
    VertexTable table = eval_vertices(F, grid, threads);
    return build_cubical_pair(grid, table, j, tol);
}

} // namespace qf

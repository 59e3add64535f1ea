#include "qflab/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qflab/errors.hpp"

namespace qf {

Z2Matrix coboundary_matrix(const CubicalPair& pair, int k) {
    const int d = pair.dim();
    if (k < 0 || k >= d) return Z2Matrix(0, static_cast<int>(k >= 0 && k <= d ? pair.n_rel(k) : 0));
    Z2Matrix D(static_cast<int>(pair.n_rel(k + 1)), static_cast<int>(pair.n_rel(k)));
    std::vector<std::int32_t> facets;
    const auto& rows = pair.rel_cells[static_cast<std::size_t>(k + 1)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
        pair.rel_facets(rows[r], facets);
        for (auto c : facets) D.flip(static_cast<int>(r), c);
    }
    return D;
}

namespace {

// Incremental GF(2) echelon over byte vectors, for basis extraction on
// the dense path.
struct ByteEchelon {
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<std::size_t> leads;

    // Reduces v in place; returns true (and stores) if independent.
    bool add(std::vector<std::uint8_t>& v) {
        reduce(v);
        auto lead = find_lead(v);
        if (lead == v.size()) return false;
        rows.push_back(v);
        leads.push_back(lead);
        return true;
    }

    void reduce(std::vector<std::uint8_t>& v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (leads[i] < v.size() && v[leads[i]]) {
                const auto& r = rows[i];
                for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= r[k];
            }
        }
    }

    static std::size_t find_lead(const std::vector<std::uint8_t>& v) {
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k]) return k;
        return v.size();
    }
};

std::size_t dense_bits_needed(const CubicalPair& pair) {
    std::size_t worst = 0;
    for (int k = 0; k < pair.dim(); ++k) {
        std::size_t bits = static_cast<std::size_t>(pair.n_rel(k + 1)) * static_cast<std::size_t>(pair.n_rel(k));
        worst = std::max(worst, bits);
    }
    return worst;
}

CohomologyResult ranks_dense(const CubicalPair& pair, bool want_basis) {
    const int d = pair.dim();
    CohomologyResult res;
    res.ranks.assign(static_cast<std::size_t>(d + 1), 0);

    std::vector<Z2Matrix> D(static_cast<std::size_t>(d));
    std::vector<int> rank_delta(static_cast<std::size_t>(d + 1), 0); // rank of delta_k, k = 0..d-1
    for (int k = 0; k < d; ++k) {
        D[static_cast<std::size_t>(k)] = coboundary_matrix(pair, k);
        rank_delta[static_cast<std::size_t>(k)] = D[static_cast<std::size_t>(k)].rank();
    }
    for (int i = 0; i <= d; ++i) {
        long long n = pair.n_rel(i);
        long long out = i < d ? rank_delta[static_cast<std::size_t>(i)] : 0;
        long long in = i > 0 ? rank_delta[static_cast<std::size_t>(i - 1)] : 0;
        res.ranks[static_cast<std::size_t>(i)] = static_cast<int>(n - out - in);
    }

    if (want_basis) {
        res.has_basis = true;
        res.basis.assign(static_cast<std::size_t>(d + 1), {});
        for (int i = 0; i <= d; ++i) {
            int expect = res.ranks[static_cast<std::size_t>(i)];
            if (expect == 0) continue;
            std::size_t ni = static_cast<std::size_t>(pair.n_rel(i));
            // Echelon of the coboundary image from degree i-1.
            ByteEchelon ech;
            if (i > 0) {
                const Z2Matrix& Dm = D[static_cast<std::size_t>(i - 1)];
                for (int c = 0; c < Dm.cols(); ++c) {
                    std::vector<std::uint8_t> col(ni, 0);
                    for (int r = 0; r < Dm.rows(); ++r)
                        if (Dm.get(r, c)) col[static_cast<std::size_t>(r)] = 1;
                    ech.add(col);
                }
            }
            // Cocycles: null space of delta_i (top degree: everything).
            std::vector<std::vector<std::uint8_t>> cocycles;
            if (i < d) {
                cocycles = D[static_cast<std::size_t>(i)].null_space();
            } else {
                cocycles.reserve(ni);
                for (std::size_t c = 0; c < ni; ++c) {
                    std::vector<std::uint8_t> e(ni, 0);
                    e[c] = 1;
                    cocycles.push_back(std::move(e));
                }
            }
            auto& out_basis = res.basis[static_cast<std::size_t>(i)];
            for (auto& z : cocycles) {
                std::vector<std::uint8_t> rep = z;
                std::vector<std::uint8_t> probe = z;
                if (ech.add(probe)) {
                    out_basis.push_back(std::move(rep));
                    if (static_cast<int>(out_basis.size()) == expect) break;
                }
            }
            if (static_cast<int>(out_basis.size()) != expect)
                throw numerics_error("cohomology_ranks: basis extraction mismatch");
        }
    }
    return res;
}

CohomologyResult ranks_sparse(const CubicalPair& pair) {
    const int d = pair.dim();
    CohomologyResult res;
    res.ranks.assign(static_cast<std::size_t>(d + 1), 0);

    // rank(delta_{k-1}) == rank(boundary_k); reduce boundaries top-down so
    // pivots of dimension k clear columns of dimension k-1 (standard
    // twist).
    std::vector<int> rank_bdry(static_cast<std::size_t>(d + 2), 0);
    std::vector<std::uint8_t> skip_next; // among (k-1)-cells
    for (int k = d; k >= 1; --k) {
        const auto& cells = pair.rel_cells[static_cast<std::size_t>(k)];
        std::vector<std::vector<std::int32_t>> cols(cells.size());
        std::vector<std::int32_t> facets;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            pair.rel_facets(cells[c], facets);
            cols[c] = facets;
        }
        const std::vector<std::uint8_t>* skip = skip_next.empty() ? nullptr : &skip_next;
        std::vector<std::int32_t> pivot_of_col;
        rank_bdry[static_cast<std::size_t>(k)] = sparse_rank(cols, skip, &pivot_of_col);
        // Prepare clearing for the next (lower) dimension.
        skip_next.assign(static_cast<std::size_t>(pair.n_rel(k - 1)), 0);
        for (auto p : pivot_of_col)
            if (p >= 0) skip_next[static_cast<std::size_t>(p)] = 1;
    }
    for (int i = 0; i <= d; ++i) {
        long long n = pair.n_rel(i);
        res.ranks[static_cast<std::size_t>(i)] =
            static_cast<int>(n - rank_bdry[static_cast<std::size_t>(i)] - rank_bdry[static_cast<std::size_t>(i + 1)]);
    }
    return res;
}

} // namespace

CohomologyResult cohomology_ranks(const CubicalPair& pair, const CohomologyOptions& opt) {
    bool dense_fits = dense_bits_needed(pair) <= opt.dense_bit_budget;
    if (opt.want_basis) {
        if (!dense_fits)
            throw precondition_error("cohomology_ranks: basis requested on a complex too large for dense elimination");
        return ranks_dense(pair, true);
    }
    return dense_fits ? ranks_dense(pair, false) : ranks_sparse(pair);
}

int rank_h0(const CubicalPair& pair) {
    std::int64_t n0 = pair.n_rel(0);
    std::vector<std::int32_t> parent(static_cast<std::size_t>(n0));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::uint8_t> killed(static_cast<std::size_t>(n0), 0);
    std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    const auto& edges = pair.rel_cells[1];
    for (const auto& e : edges) {
        int axis = -1;
        for (int a = 0; a < pair.grid.d; ++a)
            if ((e.mask >> a) & 1u) axis = a;
        std::int64_t v0 = e.base;
        std::int64_t v1 = e.base + pair.grid.stride(axis);
        std::int32_t i0 = pair.rel_index(v0, 0);
        std::int32_t i1 = pair.rel_index(v1, 0);
        if (i0 >= 0 && i1 >= 0) {
            std::int32_t r0 = find(i0), r1 = find(i1);
            if (r0 != r1) {
                parent[static_cast<std::size_t>(r1)] = r0;
                if (killed[static_cast<std::size_t>(r1)]) killed[static_cast<std::size_t>(r0)] = 1;
            }
        } else if (i0 >= 0 || i1 >= 0) {
            // Relative edge with one endpoint in sub: forces the cochain
            // to vanish on that component.
            std::int32_t r = find(i0 >= 0 ? i0 : i1);
            killed[static_cast<std::size_t>(r)] = 1;
        }
    }
    int rank = 0;
    for (std::int32_t i = 0; i < n0; ++i)
        if (find(i) == i && !killed[static_cast<std::size_t>(find(i))]) ++rank;
    return rank;
}

std::vector<std::uint8_t> zero_cocycle_class(const CubicalPair& pair) {
    if (rank_h0(pair) != 1)
        throw precondition_error("zero_cocycle_class: rank H^0 is not 1");
    return std::vector<std::uint8_t>(static_cast<std::size_t>(pair.n_rel(0)), 1);
}

} // namespace qf

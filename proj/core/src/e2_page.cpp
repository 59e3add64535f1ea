#include "qflab/e2_page.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "qflab/errors.hpp"
#include "qflab/rng.hpp"

namespace qf {

int E2Page::rank(int i, int j) const {
    if (i < 0 || i > d || j < 0 || j > n - 1) return 0;
    return ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

int E2Page::total_rank() const {
    int t = 0;
    for (const auto& row : ranks)
        for (int r : row) t += r;
    return t;
}

namespace {

std::pair<std::uint64_t, std::uint64_t> pair_signature(const CubicalPair& pair) {
    std::uint64_t h1 = 0xcbf29ce484222325ULL;
    std::uint64_t h2 = 0x84222325cbf29ce4ULL;
    int dims[3] = {pair.grid.d, pair.grid.mv, 0};
    auto mix = [&](const void* p, std::size_t n) {
        h1 = fnv1a(p, n, h1);
        h2 = fnv1a(p, n, h2 * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL);
    };
    mix(dims, sizeof(dims));
    mix(pair.grid.lo.data(), pair.grid.lo.size() * sizeof(double));
    mix(pair.grid.hi.data(), pair.grid.hi.size() * sizeof(double));
    for (unsigned m = 0; m < 8; ++m) {
        if (!pair.total[m].empty()) mix(pair.total[m].data(), pair.total[m].size());
        if (!pair.sub[m].empty()) mix(pair.sub[m].data(), pair.sub[m].size());
    }
    return {h1, h2};
}

// Rank computations repeat across filtration levels and zeta choices
// (identical sub masks); memoized on the full mask signature.
std::mutex g_cache_mutex;
std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<int>> g_rank_cache;

} // namespace

E2Page compute_e2(const QuadraticFamily& F, int grid_res, const E2Options& opt) {
    if (F.d() > 3) throw precondition_error("compute_e2: parameter dimension must be <= 3");
    E2Page page;
    page.n = F.n();
    page.d = F.d();
    page.grid_res = grid_res;
    page.tol = opt.tol;
    page.ranks.assign(static_cast<std::size_t>(page.d + 1), std::vector<int>(static_cast<std::size_t>(page.n), 0));

    GridModel grid = make_grid(F.domain(), grid_res);
    VertexTable table = eval_vertices(F, grid, opt.threads);

    for (int j = 0; j <= page.n - 1; ++j) {
        CubicalPair pair = build_cubical_pair(grid, table, j + 1, opt.tol);
        std::vector<int> ranks;
        if (opt.use_rank_cache) {
            auto sig = pair_signature(pair);
            {
                std::lock_guard<std::mutex> lock(g_cache_mutex);
                auto it = g_rank_cache.find(sig);
                if (it != g_rank_cache.end()) ranks = it->second;
            }
            if (ranks.empty()) {
                ranks = cohomology_ranks(pair).ranks;
                std::lock_guard<std::mutex> lock(g_cache_mutex);
                g_rank_cache.emplace(sig, ranks);
            }
        } else {
            ranks = cohomology_ranks(pair).ranks;
        }
        for (int i = 0; i <= page.d; ++i)
            page.ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ranks[static_cast<std::size_t>(i)];
    }
    return page;
}

std::string render_page(const E2Page& page) {
    std::ostringstream os;
    for (int j = page.n - 1; j >= 0; --j) {
        os << "j=" << j << " |";
        for (int i = 0; i <= page.d; ++i) {
            int r = page.rank(i, j);
            if (r == 0)
                os << "    0";
            else if (r == 1)
                os << "   Z2";
            else
                os << " Z2^" << r;
        }
        os << "\n";
    }
    os << "     ";
    for (int i = 0; i <= page.d; ++i) os << "  i=" << i;
    os << "\n";
    return os.str();
}

CollapseReport collapse_report(const E2Page& page, const std::vector<DifferentialEntry>& d2_entries,
                               const std::vector<DifferentialEntry>& d3_entries) {
    CollapseReport rep;
    rep.einf_ranks = page.ranks;
    auto& R = rep.einf_ranks;
    auto at = [&](int i, int j) -> int& { return R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    auto in_range = [&](int i, int j) { return i >= 0 && i <= page.d && j >= 0 && j <= page.n - 1; };

    auto has_entry = [](const std::vector<DifferentialEntry>& es, int i, int j) {
        for (const auto& e : es)
            if (e.si == i && e.sj == j) return true;
        return false;
    };

    // d2 pass.
    for (const auto& e : d2_entries) {
        if (e.r != 2) throw precondition_error("collapse_report: r mismatch in d2 entry");
        int rho = e.matrix.rank();
        at(e.si, e.sj) -= rho;
        at(e.ti, e.tj) -= rho;
        if (at(e.si, e.sj) < 0 || at(e.ti, e.tj) < 0)
            throw precondition_error("collapse_report: differential rank exceeds page rank");
    }
    std::vector<std::uint8_t> d2_touched(static_cast<std::size_t>((page.d + 1) * page.n), 0);
    for (const auto& e : d2_entries) {
        if (e.matrix.rank() == 0) continue;
        d2_touched[static_cast<std::size_t>(e.si * page.n + e.sj)] = 1;
        d2_touched[static_cast<std::size_t>(e.ti * page.n + e.tj)] = 1;
    }
    for (int i = 0; i <= page.d; ++i)
        for (int j = 0; j <= page.n - 1; ++j) {
            if (page.rank(i, j) == 0) continue;
            if (!in_range(i + 2, j - 1) || page.rank(i + 2, j - 1) == 0) continue;
            if (!has_entry(d2_entries, i, j)) rep.undetermined.push_back({i, j});
        }

    // d3 pass on the d2-collapsed ranks.
    for (const auto& e : d3_entries) {
        if (e.r != 3) throw precondition_error("collapse_report: r mismatch in d3 entry");
        if (d2_touched[static_cast<std::size_t>(e.si * page.n + e.sj)] ||
            d2_touched[static_cast<std::size_t>(e.ti * page.n + e.tj)])
            throw precondition_error("collapse_report: d3 through d2-active positions is out of scope");
        int rho = e.matrix.rank();
        at(e.si, e.sj) -= rho;
        at(e.ti, e.tj) -= rho;
        if (at(e.si, e.sj) < 0 || at(e.ti, e.tj) < 0)
            throw precondition_error("collapse_report: differential rank exceeds page rank");
    }
    for (int i = 0; i <= page.d; ++i)
        for (int j = 0; j <= page.n - 1; ++j) {
            if (R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) continue;
            if (!in_range(i + 3, j - 2) || R[static_cast<std::size_t>(i + 3)][static_cast<std::size_t>(j - 2)] == 0)
                continue;
            if (!has_entry(d3_entries, i, j)) rep.undetermined.push_back({i, j});
        }

    rep.total_rank = 0;
    for (const auto& row : R)
        for (int r : row) rep.total_rank += r;
    rep.complete = rep.undetermined.empty();
    return rep;
}

} // namespace qf

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qflab/errors.hpp"
#include "qflab/sym_matrix.hpp"

namespace qf {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffDiagRel = 1e-13;

double max_off_diag(const std::vector<double>& a, int n) {
    double m = 0.0;
    for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) m = std::max(m, std::abs(a[static_cast<std::size_t>(p) * n + q]));
    return m;
}

} // namespace

EigenData eigen_sorted(const SymMatrix& S) {
    const int n = S.n();
    std::vector<double> a = S.data();
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double scale = 1.0 + S.max_abs();
    const double thresh = kOffDiagRel * scale;

    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto vat = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

    int sweep = 0;
    while (n > 1 && max_off_diag(a, n) > thresh) {
        if (++sweep > kMaxSweeps) throw numerics_error("eigen_sorted: Jacobi sweep cap exceeded");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) <= thresh) continue;
                // Standard stable rotation: theta from the diagonal
                // difference, smaller root for t.
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = akp - s * (akq + tau * akp);
                    at(p, k) = at(k, p);
                    at(k, q) = akq + s * (akp - tau * akq);
                    at(q, k) = at(k, q);
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = vat(k, p), vkq = vat(k, q);
                    vat(k, p) = vkp - s * (vkq + tau * vkp);
                    vat(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    // Stable descending sort; ties keep the solver's natural order.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i) * n + i] > a[static_cast<std::size_t>(j) * n + j];
    });

    EigenData e;
    e.n = n;
    e.values.resize(static_cast<std::size_t>(n));
    e.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        int src = order[static_cast<std::size_t>(k)];
        e.values[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(src) * n + src];
        for (int r = 0; r < n; ++r)
            e.vectors[static_cast<std::size_t>(r) * n + k] = v[static_cast<std::size_t>(r) * n + src];
    }
    return e;
}

} // namespace qf

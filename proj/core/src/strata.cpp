#include "qflab/strata.hpp"

#include <cmath>

#include "qflab/errors.hpp"

namespace qf {

std::vector<StratumTag> detect_stratum(const SymMatrix& S, double tol) {
    if (!(tol > 0.0)) throw precondition_error("detect_stratum: tol must be > 0");
    EigenData e = eigen_sorted(S);
    std::vector<StratumTag> tags;
    int n = e.n;
    int start = 0;
    while (start < n) {
        int end = start;
        while (end + 1 < n &&
               e.values[static_cast<std::size_t>(start)] - e.values[static_cast<std::size_t>(end + 1)] <= tol)
            ++end;
        int m = end - start + 1;
        if (m >= 2) {
            StratumTag t;
            t.j = start + 1;
            t.m = m;
            t.zero_crossing = std::abs(e.values[static_cast<std::size_t>(start)]) <= tol;
            tags.push_back(t);
        }
        start = end + 1;
    }
    return tags;
}

} // namespace qf

#pragma once

#include <vector>

#include "qflab/sym_matrix.hpp"

namespace qf {

/// Maximal eigenvalue-coincidence run: lambda_{j-1} != lambda_j = ... =
/// lambda_{j+m-1} != lambda_{j+m} up to the detection tolerance.
/// zero_crossing marks runs whose repeated eigenvalue sits at zero.
struct StratumTag {
    int j = 0;       // leading index, 1-based
    int m = 0;       // multiplicity, >= 2
    bool zero_crossing = false;
};

/// Reports maximal runs of eigenvalues pairwise within tol (descending
/// order makes that first-minus-last <= tol). Runs of length 1 are not
/// reported; an empty list means all gaps exceed tol.
std::vector<StratumTag> detect_stratum(const SymMatrix& S, double tol);

} // namespace qf

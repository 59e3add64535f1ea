#pragma once

#include <cstdint>
#include <vector>

#include "qflab/cubical.hpp"
#include "qflab/z2.hpp"

namespace qf {

/// Ranks of the relative cohomology H^i(total, sub; Z2), degree 0..d.
/// Representative cocycles (vectors over the relative cells of each
/// degree) are carried only when requested and the complex is small
/// enough for dense elimination.
struct CohomologyResult {
    std::vector<int> ranks;
    bool has_basis = false;
    std::vector<std::vector<std::vector<std::uint8_t>>> basis; // [degree][k][rel cell]
};

struct CohomologyOptions {
    bool want_basis = false;
    // Largest dense coboundary matrix, in bits; larger complexes go
    // through the sparse column reduction (ranks only).
    std::size_t dense_bit_budget = std::size_t(1) << 28;
};

/// Relative coboundary matrix C^k -> C^{k+1} on the relative cells
/// (dense; check the size before calling on big complexes).
Z2Matrix coboundary_matrix(const CubicalPair& pair, int k);

CohomologyResult cohomology_ranks(const CubicalPair& pair, const CohomologyOptions& opt = CohomologyOptions());

/// rank H^0 via components of the relative 1-skeleton; components touching
/// `sub` through a relative edge are killed. Cheap at any size.
int rank_h0(const CubicalPair& pair);

/// Generator of H^0(total, sub) when its rank is 1 (equivalently, sub is
/// empty and the model is connected): the 0-cochain that is 1 on every
/// relative vertex. Errors when the rank is not 1.
std::vector<std::uint8_t> zero_cocycle_class(const CubicalPair& pair);

} // namespace qf

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qflab/curve_trace.hpp"
#include "qflab/param_domain.hpp"

namespace qf {

/// Closed polyline in R^3 (first point == last point).
using ClosedPolyline = std::vector<Vec>;

/// Closes a border-relative curve with a great-circle arc on the domain
/// sphere; already-closed curves are returned unchanged (with the seam
/// point duplicated). For antipodal endpoints the great circle is chosen
/// through a deterministic perpendicular controlled by arc_choice; the
/// mod-2 linking against interior cycles does not depend on that choice
/// because every 1-cycle on the border sphere bounds there.
ClosedPolyline close_relative_curve(const DegeneracyCurve& c, const ParamDomain& ball,
                                    double arc_choice = 0.0);

/// Disjoint pair of closed polylines ready for crossing counts.
struct PolyLink {
    ClosedPolyline curve_a;
    ClosedPolyline curve_b;
    double min_separation = 0.0;
    double scale = 0.0;
};

/// Validates closedness and disjointness (min separation above
/// 1e-7 * scale; below that is a non_generic_error).
PolyLink make_poly_link(const ClosedPolyline& a, const ClosedPolyline& b);

struct LinkOptions {
    /// Projection RNG seed; unset derives one from the input coordinates.
    std::optional<std::uint64_t> seed;
    int max_tries = 50;
};

struct LinkResult {
    int lk_mod2 = 0;
    int directions_tested = 0;
};

/// Parity of over-crossings of curve_a over curve_b in a generic planar
/// projection; degenerate projections (near-parallel segments, ambiguous
/// depth, near-endpoint crossings) are rejected and the direction is
/// resampled, up to max_tries.
LinkResult mod2_linking(const PolyLink& link, const LinkOptions& opt = LinkOptions());

/// Total mod-2 linking of two unions of closed curves.
int mod2_linking_total(const std::vector<ClosedPolyline>& as, const std::vector<ClosedPolyline>& bs,
                       const LinkOptions& opt = LinkOptions());

double min_separation(const ClosedPolyline& a, const ClosedPolyline& b);

} // namespace qf

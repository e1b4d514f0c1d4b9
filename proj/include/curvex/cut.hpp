#ifndef CURVEX_CUT_HPP
#define CURVEX_CUT_HPP

#include <variant>
#include <vector>

#include "curvex/multicurve.hpp"
#include "curvex/surface.hpp"

namespace curvex {

/// Boundary circle of a cut piece that was the k-th boundary circle of
/// the ambient surface (labels are 1-based and rigid).
struct ExteriorLabel {
    int label;
    bool operator==(const ExteriorLabel&) const = default;
};

/// Boundary circle of a cut piece that is one of the two copies of a cut
/// curve; `component` is the 0-based index of the curve in trace order,
/// `side` is 0 for the left of the traversal and 1 for the right.
struct CurveSide {
    int component;
    int side;
    bool operator==(const CurveSide&) const = default;
};

using CircleProvenance = std::variant<ExteriorLabel, CurveSide>;

struct CutResult {
    std::vector<Triangulation> pieces;
    /// provenance[p][k] describes boundary circle k of piece p.
    std::vector<std::vector<CircleProvenance>> provenance;
};

/// Cuts the surface along the multicurve.  Pieces are valid
/// triangulations; the disjoint union preserves the Euler
/// characteristic; each cut curve contributes one boundary circle per
/// side.
CutResult cut_along(const NormalCoordinates& c);

}  // namespace curvex

#endif

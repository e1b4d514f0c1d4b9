#ifndef CURVEX_DIAGRAM_HPP
#define CURVEX_DIAGRAM_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "curvex/multicurve.hpp"

namespace curvex::detail {

using Rat = mpq_class;

/// Remaining step allowance shared along one operation; every bigon
/// slide or return removal costs one step.
struct Budget {
    long remaining = -1;  // negative = unlimited
    void spend(const char* what) {
        if (remaining < 0) return;
        if (remaining == 0) throw StepBudgetExceeded(what);
        --remaining;
    }
};

/// A curve point on an edge, with an exact position in the front slot's
/// direction (0 < u < 1).
struct DPoint {
    int edge;
    Rat u;
    bool operator==(const DPoint& o) const { return edge == o.edge && u == o.u; }
};

/// One curve component in general position: cyclic point sequence with,
/// per chord j (from pts[j] to pts[j+1]), its triangle and the slot
/// carrying pts[j] there.
struct DComp {
    std::vector<DPoint> pts;
    std::vector<int> tris;
    std::vector<SlotId> in_slots;
    size_t size() const { return pts.size(); }
};

/// Overlay of two multicurve families on one surface.
struct Diagram {
    const Triangulation* T = nullptr;
    std::vector<DComp> a, b;
};

/// Position of a point around the boundary of its triangle, in [0, 3):
/// side index plus the fraction along the side's own direction.
Rat boundary_coord(const Triangulation& T, const DPoint& p, SlotId slot);

/// Counter-clockwise distance between two boundary positions.
Rat ccw_dist(const Rat& from, const Rat& to);

/// Traces both weight vectors with interleaving-free parameters.
Diagram make_diagram(const Triangulation& T, const std::vector<long>& wa,
                     const std::vector<long>& wb);

/// Total crossings between the two families.
long count_crossings(const Diagram& d);

/// Removes empty bigons between the families by sliding b across a until
/// none remain; afterwards the crossing count is the geometric
/// intersection number.
long reduce_to_minimal(Diagram& d, Budget& budget);

/// Removes returns from every component of the family (a vector of
/// components forming one embedded multicurve); drops components that
/// become empty.  The result is normal.
void tighten_family(const Triangulation& T, std::vector<DComp>& family, Budget& budget);

/// Edge weights of a family.
std::vector<long> family_weights(const Triangulation& T, const std::vector<DComp>& family);

/// Throws InternalError if two chords of the family cross.
void assert_embedded(const Triangulation& T, const std::vector<DComp>& family,
                     const char* where);

/// Full Dehn twist pipeline: weights of the image of b under the n-th
/// power of the twist along the single curve a.
std::vector<long> twist_image(const Triangulation& T, const std::vector<long>& wa, long n,
                              const std::vector<long>& wb, Budget& budget);

}  // namespace curvex::detail

#endif

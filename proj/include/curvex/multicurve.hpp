#ifndef CURVEX_MULTICURVE_HPP
#define CURVEX_MULTICURVE_HPP

#include <memory>
#include <vector>

#include "curvex/surface.hpp"

namespace curvex {

using SurfaceRef = std::shared_ptr<const Triangulation>;

/// Isotopy class of a multicurve as non-negative integer edge weights
/// satisfying the parity and triangle-inequality conditions.
struct NormalCoordinates {
    SurfaceRef surface;
    std::vector<long> weights;  // indexed by edge id

    bool operator==(const NormalCoordinates& o) const {
        return *surface == *o.surface && weights == o.weights;
    }
    long total_weight() const;
    bool empty() const { return total_weight() == 0; }
};

/// Checks both invariants and returns the value.
NormalCoordinates validate(SurfaceRef t, std::vector<long> weights);

/// A point where a traced curve crosses an edge, at strand position
/// `pos` (0-based) counted along the edge's front slot direction.
struct StrandPoint {
    int edge;
    long pos;
    bool operator==(const StrandPoint&) const = default;
};

/// One component as a cyclic point sequence; tris[j] is the triangle
/// containing the chord from points[j] to points[j+1 mod n], and
/// in_slots[j] is the slot of that triangle carrying points[j].
struct TracedComponent {
    std::vector<StrandPoint> points;
    std::vector<int> tris;
    std::vector<SlotId> in_slots;
};

struct TracedMulticurve {
    std::vector<TracedComponent> components;
};

/// Deterministic resolution of weights into disjoint simple cycles.
TracedMulticurve trace(const NormalCoordinates& c);

enum class ComponentClass {
    trivial,
    puncture_peripheral,
    boundary_parallel,
    generic,
};

/// Classifies a single-component multicurve by cutting along it.
/// Ghost vertices count as zero punctures.
ComponentClass classify_component(const NormalCoordinates& component);

/// A validated generic r-family: pairwise disjoint, pairwise
/// non-isotopic generic components in lexicographic weight order.
struct GenericFamily {
    SurfaceRef surface;
    std::vector<NormalCoordinates> components;

    int r() const { return static_cast<int>(components.size()); }
    /// Union multicurve (componentwise weight sum).
    NormalCoordinates as_union() const;
};

/// Splits, classifies, and orders the components of c.
/// Throws NonGenericComponent or IsotopicPair with offending indices.
GenericFamily as_generic_family(const NormalCoordinates& c);

/// Equality of isotopy classes; on surfaces with at least one marked
/// vertex this is exactly isotopy in the complement of the punctures.
bool canonical_eq(const NormalCoordinates& a, const NormalCoordinates& b);

/// Per-component weight vectors of a traced multicurve.
std::vector<std::vector<long>> component_weights(const Triangulation& t,
                                                 const TracedMulticurve& tm);

}  // namespace curvex

#endif

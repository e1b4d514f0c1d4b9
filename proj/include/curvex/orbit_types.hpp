#ifndef CURVEX_ORBIT_TYPES_HPP
#define CURVEX_ORBIT_TYPES_HPP

#include <set>
#include <string>
#include <vector>

#include "curvex/multicurve.hpp"
#include "curvex/surface.hpp"

namespace curvex {

/// Node of the decorated dual graph: one cut piece, decorated with its
/// genus, its puncture count, and the set of ambient boundary circles
/// (1-based labels) it inherited.
struct OrbitNode {
    int genus = 0;
    int punctures = 0;
    std::set<int> exterior_labels;
    bool operator==(const OrbitNode&) const = default;
};

/// Edge of the decorated dual graph: the two nodes carrying the sides of
/// one cut curve (equal indices for a self-loop).
struct OrbitEdge {
    int node_a = 0;
    int node_b = 0;
    bool operator==(const OrbitEdge&) const = default;
};

/// Decorated dual graph of a surface cut along a generic family, the
/// complete orbit invariant of the family.
struct OrbitType {
    std::vector<OrbitNode> nodes;
    std::vector<OrbitEdge> edges;
    SurfaceSignature ambient;
};

/// Deterministic serialization of an OrbitType, minimal over all node and
/// edge relabelings.  Exterior labels are rigid: codes distinguish graphs
/// that differ only by permuting ambient boundary labels.
using CanonicalCode = std::string;

/// Computes the decorated dual graph of the surface cut along the family.
OrbitType orbit_type_of(const GenericFamily& fam);

/// Checks the structural invariants: connectivity, genus and puncture
/// accounting, exterior labels partitioning the ambient boundary set, and
/// the genericity exclusions (no disc/once-punctured-disc piece, no
/// annulus piece except the one bounded by both sides of a single curve).
bool is_valid_orbit_type(const OrbitType& ot);

/// Canonical code; equal codes characterize isomorphic decorated graphs.
CanonicalCode canonicalize(const OrbitType& ot);

/// The flat integer encoding behind canonicalize, without the ambient
/// header; equal encodings likewise characterize isomorphic graphs of a
/// fixed ambient signature.
std::vector<int> canonical_encoding(const OrbitType& ot);

namespace detail {
/// Formats an encoding as a canonical code string.
CanonicalCode render_code(const SurfaceSignature& sig, const std::vector<int>& enc);

/// canonical_encoding, additionally collecting every node order that
/// achieves the minimal encoding; composing any order with the inverse
/// of another yields a graph automorphism, and all automorphisms arise
/// this way.
std::vector<int> canonical_encoding_with_orders(const OrbitType& ot,
                                                std::vector<std::vector<int>>& orders);
}  // namespace detail

/// Whether two families lie in one mapping class group orbit.
bool same_orbit(const GenericFamily& f1, const GenericFamily& f2);

/// Whether every component of f1 is isotopic to a distinct component of
/// f2 (an injective matching by isotopy class).
bool is_face(const GenericFamily& f1, const GenericFamily& f2);

}  // namespace curvex

#endif

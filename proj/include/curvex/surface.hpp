#ifndef CURVEX_SURFACE_HPP
#define CURVEX_SURFACE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "curvex/errors.hpp"

namespace curvex {

/// Topological type (g, m, q) of a compact oriented surface: genus,
/// number of punctures, number of boundary circles.
struct SurfaceSignature {
    int genus = 0;
    int punctures = 0;
    int boundary = 0;

    auto operator<=>(const SurfaceSignature&) const = default;

    /// True for the signatures whose curve complex is empty: spheres with
    /// up to three punctures, discs with up to two punctures, the cylinder,
    /// the once-punctured cylinder, and the three-holed sphere.
    bool has_empty_curve_complex() const;

    bool is_closed_torus() const { return genus == 1 && punctures == 0 && boundary == 0; }

    std::string to_string() const;
};

enum class VertexKind : std::uint8_t {
    puncture,
    boundary,
    ghost,  // auxiliary marked point on closed unmarked surfaces
};

/// A side slot of a triangle, encoded as tri * 3 + side.
using SlotId = int;
inline constexpr SlotId make_slot(int tri, int side) { return tri * 3 + side; }
inline constexpr int slot_tri(SlotId s) { return s / 3; }
inline constexpr int slot_side(SlotId s) { return s % 3; }

/// Immutable combinatorial oriented surface.
///
/// Triangles are positively oriented with local vertices 0,1,2; side s runs
/// from local vertex s to s+1 (mod 3); corner c sits at local vertex c.
/// Gluings identify two side slots reversing direction (start of one side
/// matches the end of the other), so the glued complex is oriented by
/// construction.  Unglued slots form the boundary.
class Triangulation {
public:
    /// `glued[slot]` is the partner slot or -1 for a boundary side.
    /// `puncture_corners` / `ghost_corner` designate the interior vertex
    /// classes that carry a marked point (one corner per marked vertex).
    Triangulation(int num_triangles, std::vector<SlotId> glued,
                  std::vector<int> puncture_corners, int ghost_corner = -1);

    int num_triangles() const { return num_triangles_; }
    int num_slots() const { return num_triangles_ * 3; }
    int num_edges() const { return static_cast<int>(edge_front_.size()); }
    int num_vertices() const { return num_vertices_; }

    SlotId partner(SlotId s) const { return glued_[s]; }
    bool is_boundary_slot(SlotId s) const { return glued_[s] < 0; }

    /// Edge of a given slot; every slot belongs to exactly one edge.
    int edge_of(SlotId s) const { return slot_edge_[s]; }
    /// The designated front slot of an edge (the smaller slot id).
    SlotId edge_front(int e) const { return edge_front_[e]; }
    /// Back slot, or -1 for a boundary edge.
    SlotId edge_back(int e) const { return edge_back_[e]; }
    bool is_boundary_edge(int e) const { return edge_back_[e] < 0; }

    /// Vertex class of corner (tri, c).
    int vertex_at(int tri, int corner) const { return corner_vertex_[tri * 3 + corner]; }
    VertexKind vertex_kind(int v) const { return vertex_kinds_[v]; }
    bool has_ghost_vertex() const { return ghost_vertex_ >= 0; }
    int ghost_vertex() const { return ghost_vertex_; }

    int num_punctures() const { return num_punctures_; }
    int num_boundary_circles() const { return static_cast<int>(boundary_circles_.size()); }
    /// Boundary circle k (0-based) as a cyclic list of boundary slots,
    /// each traversed in its triangle's direction.
    const std::vector<SlotId>& boundary_circle(int k) const { return boundary_circles_[k]; }
    /// Boundary circle containing a boundary slot.
    int boundary_circle_of(SlotId s) const { return slot_circle_[s]; }

    int euler_characteristic() const { return num_vertices_ - num_edges() + num_triangles_; }

    /// Structural equality (identical tables).
    bool operator==(const Triangulation& o) const {
        return num_triangles_ == o.num_triangles_ && glued_ == o.glued_ &&
               vertex_kinds_ == o.vertex_kinds_ && corner_vertex_ == o.corner_vertex_;
    }

private:
    int num_triangles_;
    std::vector<SlotId> glued_;
    std::vector<int> slot_edge_;
    std::vector<SlotId> edge_front_;
    std::vector<SlotId> edge_back_;
    std::vector<int> corner_vertex_;
    std::vector<VertexKind> vertex_kinds_;
    std::vector<std::vector<SlotId>> boundary_circles_;
    std::vector<int> slot_circle_;
    int num_vertices_ = 0;
    int num_punctures_ = 0;
    int ghost_vertex_ = -1;
};

/// Computed signature of a triangulation.  Ghost vertices are not counted
/// as punctures.  Throws NonIntegerGenus on a corrupted complex.
SurfaceSignature signature_of(const Triangulation& t);

/// Deterministic triangulation of the surface with the given signature.
/// Throws UnsupportedSignature for the spheres with fewer than three
/// punctures, which admit no triangulation with all interior vertices
/// marked.
Triangulation build_standard_surface(const SurfaceSignature& sig);

/// Mutable helper used by the builder and by the cutting machinery.
class TriangulationBuilder {
public:
    int add_triangle();
    void glue(SlotId a, SlotId b);
    void unglue(SlotId a);
    bool is_glued(SlotId a) const { return glued_[a] >= 0; }
    SlotId partner(SlotId a) const { return glued_[a]; }
    int num_triangles() const { return static_cast<int>(alive_.size()); }

    void mark_puncture(int tri, int corner);
    void mark_ghost(int tri, int corner);

    /// 1-to-3 subdivision; returns the three replacement triangles
    /// (ta, tb, tc) whose shared center vertex is corner 2 of each.
    std::array<int, 3> subdivide(int tri);

    /// Removes the face of a triangle, turning its sides (and their former
    /// partners) into boundary.
    void remove_face(int tri);

    /// Carves a fresh boundary circle inside the given triangle, touching
    /// no pre-existing vertex.
    void carve_boundary(int tri);

    Triangulation freeze() const;

private:
    std::vector<SlotId> glued_;   // indexed by slot, -1 = free
    std::vector<bool> alive_;
    std::vector<std::pair<int, int>> puncture_marks_;  // (tri, corner)
    std::pair<int, int> ghost_mark_{-1, -1};
};

}  // namespace curvex

#endif

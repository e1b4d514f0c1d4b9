#include "curvex/multicurve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "curvex/cut.hpp"

namespace curvex {

long NormalCoordinates::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0L);
}

NormalCoordinates validate(SurfaceRef t, std::vector<long> weights) {
    if (static_cast<int>(weights.size()) != t->num_edges())
        throw InvalidCoordinates("expected " + std::to_string(t->num_edges()) +
                                 " weights, got " + std::to_string(weights.size()));
    for (int e = 0; e < t->num_edges(); ++e) {
        if (weights[e] < 0) throw InvalidCoordinates("negative weight on edge " + std::to_string(e));
        if (t->is_boundary_edge(e) && weights[e] != 0)
            throw BoundaryWeightNonzero("edge " + std::to_string(e));
    }
    for (int tri = 0; tri < t->num_triangles(); ++tri) {
        long x[3];
        for (int i = 0; i < 3; ++i) x[i] = weights[t->edge_of(make_slot(tri, i))];
        if ((x[0] + x[1] + x[2]) % 2 != 0)
            throw ParityViolation("triangle " + std::to_string(tri));
        for (int i = 0; i < 3; ++i)
            if (x[i] > x[(i + 1) % 3] + x[(i + 2) % 3])
                throw TriangleInequalityViolation("triangle " + std::to_string(tri) +
                                                  ", side " + std::to_string(i));
    }
    return NormalCoordinates{std::move(t), std::move(weights)};
}

namespace {

/// Corner count at corner c of a triangle with side weights x[0..2]:
/// arcs cutting off the vertex between sides (c+2)%3 and c.
long corner_count(const long x[3], int c) {
    return (x[(c + 2) % 3] + x[c] - x[(c + 1) % 3]) / 2;
}

struct SlotPoint {
    SlotId slot;
    long pos;  // position in the slot's own direction
};

}  // namespace

TracedMulticurve trace(const NormalCoordinates& c) {
    const Triangulation& t = *c.surface;
    const auto& w = c.weights;

    auto edge_at = [&](SlotId s) { return t.edge_of(s); };
    auto weight_at = [&](SlotId s) { return w[edge_at(s)]; };
    // Canonical (edge, front-pos) of a slot point.
    auto canonical = [&](const SlotPoint& p) -> StrandPoint {
        const int e = edge_at(p.slot);
        const bool front = (t.edge_front(e) == p.slot);
        return StrandPoint{e, front ? p.pos : w[e] - 1 - p.pos};
    };
    // The same geometric point seen from the other side of its edge.
    auto flip = [&](const SlotPoint& p) -> SlotPoint {
        const SlotId other = t.partner(p.slot);
        return SlotPoint{other, weight_at(p.slot) - 1 - p.pos};
    };
    // Within-triangle corner-arc partner of a slot point.
    auto arc_partner = [&](const SlotPoint& p) -> SlotPoint {
        const int tri = slot_tri(p.slot);
        const int s = slot_side(p.slot);
        long x[3];
        for (int i = 0; i < 3; ++i) x[i] = w[edge_at(make_slot(tri, i))];
        if (p.pos < corner_count(x, s)) {
            // Arc at corner s: pairs with side (s+2)%3.
            return SlotPoint{make_slot(tri, (s + 2) % 3), x[(s + 2) % 3] - 1 - p.pos};
        }
        // Arc at corner (s+1)%3.
        const long k = x[s] - 1 - p.pos;
        if (k < 0 || k >= corner_count(x, (s + 1) % 3))
            throw InternalError("trace: point not on any corner arc");
        return SlotPoint{make_slot(tri, (s + 1) % 3), k};
    };

    std::vector<std::vector<char>> visited(t.num_edges());
    for (int e = 0; e < t.num_edges(); ++e) visited[e].assign(w[e], 0);

    TracedMulticurve out;
    for (int e = 0; e < t.num_edges(); ++e) {
        for (long p = 0; p < w[e]; ++p) {
            if (visited[e][p]) continue;
            TracedComponent comp;
            // Start at (e, p), heading into the front slot's triangle.
            SlotPoint cur{t.edge_front(e), p};
            const StrandPoint start = canonical(cur);
            for (;;) {
                const StrandPoint sp = canonical(cur);
                if (!comp.points.empty() && sp == start) break;
                visited[sp.edge][sp.pos] = 1;
                comp.points.push_back(sp);
                comp.tris.push_back(slot_tri(cur.slot));
                comp.in_slots.push_back(cur.slot);
                const SlotPoint exit = arc_partner(cur);
                cur = flip(exit);  // enter the next triangle
            }
            out.components.push_back(std::move(comp));
        }
    }
    return out;
}

std::vector<std::vector<long>> component_weights(const Triangulation& t,
                                                 const TracedMulticurve& tm) {
    std::vector<std::vector<long>> out;
    for (const auto& comp : tm.components) {
        std::vector<long> w(t.num_edges(), 0);
        for (const auto& p : comp.points) ++w[p.edge];
        out.push_back(std::move(w));
    }
    return out;
}

bool canonical_eq(const NormalCoordinates& a, const NormalCoordinates& b) {
    if (!(*a.surface == *b.surface)) throw SurfaceMismatch("canonical_eq");
    return a.weights == b.weights;
}

ComponentClass classify_component(const NormalCoordinates& component) {
    const TracedMulticurve tm = trace(component);
    if (tm.components.size() != 1)
        throw MultipleComponents("expected 1 component, got " +
                                 std::to_string(tm.components.size()));
    const CutResult cut = cut_along(component);
    for (size_t pi = 0; pi < cut.pieces.size(); ++pi) {
        const Triangulation& piece = cut.pieces[pi];
        const SurfaceSignature sig = signature_of(piece);
        if (sig.genus != 0) continue;
        const auto& prov = cut.provenance[pi];
        if (sig.boundary == 1 && std::holds_alternative<CurveSide>(prov[0])) {
            if (sig.punctures == 0) return ComponentClass::trivial;
            if (sig.punctures == 1) return ComponentClass::puncture_peripheral;
        }
        if (sig.boundary == 2 && sig.punctures == 0 && !piece.has_ghost_vertex()) {
            const bool c0 = std::holds_alternative<CurveSide>(prov[0]);
            const bool c1 = std::holds_alternative<CurveSide>(prov[1]);
            if (c0 != c1) return ComponentClass::boundary_parallel;
        }
    }
    return ComponentClass::generic;
}

NormalCoordinates GenericFamily::as_union() const {
    std::vector<long> w(surface->num_edges(), 0);
    for (const auto& c : components)
        for (size_t e = 0; e < w.size(); ++e) w[e] += c.weights[e];
    return NormalCoordinates{surface, std::move(w)};
}

GenericFamily as_generic_family(const NormalCoordinates& c) {
    const TracedMulticurve tm = trace(c);
    std::vector<NormalCoordinates> comps;
    for (auto& w : component_weights(*c.surface, tm))
        comps.push_back(NormalCoordinates{c.surface, std::move(w)});
    std::sort(comps.begin(), comps.end(),
              [](const NormalCoordinates& a, const NormalCoordinates& b) {
                  return a.weights < b.weights;
              });
    for (size_t i = 0; i < comps.size(); ++i) {
        const ComponentClass cls = classify_component(comps[i]);
        if (cls != ComponentClass::generic) {
            const char* name = cls == ComponentClass::trivial ? "trivial"
                               : cls == ComponentClass::puncture_peripheral
                                   ? "puncture_peripheral"
                                   : "boundary_parallel";
            throw NonGenericComponent("component " + std::to_string(i + 1) + " is " + name);
        }
    }
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = i + 1; j < comps.size(); ++j)
            if (comps[i].weights == comps[j].weights)
                throw IsotopicPair("components " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1));
    // On closed unmarked surfaces two distinct weight vectors can still be
    // isotopic across the ghost vertex; this shows up as a cut piece that is
    // an annulus between two different components with nothing but the ghost
    // inside.
    if (c.surface->has_ghost_vertex() && comps.size() >= 2) {
        for (size_t i = 0; i < comps.size(); ++i) {
            for (size_t j = i + 1; j < comps.size(); ++j) {
                std::vector<long> pw(c.surface->num_edges(), 0);
                for (size_t e = 0; e < pw.size(); ++e)
                    pw[e] = comps[i].weights[e] + comps[j].weights[e];
                const CutResult cut =
                    cut_along(NormalCoordinates{c.surface, std::move(pw)});
                for (size_t pi = 0; pi < cut.pieces.size(); ++pi) {
                    const SurfaceSignature sig = signature_of(cut.pieces[pi]);
                    if (sig.genus != 0 || sig.punctures != 0 || sig.boundary != 2) continue;
                    const auto& prov = cut.provenance[pi];
                    const auto* s0 = std::get_if<CurveSide>(&prov[0]);
                    const auto* s1 = std::get_if<CurveSide>(&prov[1]);
                    if (s0 && s1 && s0->component != s1->component)
                        throw IsotopicPair("components " + std::to_string(i + 1) + " and " +
                                           std::to_string(j + 1) + " (across the ghost)");
                }
            }
        }
    }
    return GenericFamily{c.surface, std::move(comps)};
}

}  // namespace curvex

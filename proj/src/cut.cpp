#include "curvex/cut.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace curvex {

namespace {

struct Item {
    bool is_corner;
    int corner = -1;    // local corner index when is_corner
    int comp = -1;      // curve point otherwise
    long idx = -1;      // point index within the component
    int side = -1;      // local side the item sits on (corner c -> side c)
};

struct PolySide {
    enum Kind { kGap, kChord } kind;
    // gap
    int edge = -1;
    long front_sub = -1;
    // chord
    int comp = -1;
    long chord = -1;
    int curve_side = -1;  // 0 = left of traversal, 1 = right
};

struct Cell {
    int tri;                        // ambient triangle
    std::vector<Item> vertices;     // polygon corners, ccw
    std::vector<PolySide> sides;    // sides[k] joins vertices[k] and [k+1]
};

struct ChordRec {
    int lo, hi;     // item indices, lo < hi
    int from, to;   // directed endpoints (traversal order)
    int comp;
    long idx;       // chord index within the component
    int parent = -1;
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

CutResult cut_along(const NormalCoordinates& c) {
    const Triangulation& T = *c.surface;
    const auto& w = c.weights;
    const TracedMulticurve tm = trace(c);

    // Points listed per slot, in the slot's own direction.
    std::vector<std::vector<std::pair<int, long>>> slot_pts(T.num_slots());
    for (int e = 0; e < T.num_edges(); ++e) {
        const SlotId f = T.edge_front(e);
        slot_pts[f].assign(w[e], {-1, -1});
        if (T.edge_back(e) >= 0) slot_pts[T.edge_back(e)].assign(w[e], {-1, -1});
    }
    for (size_t k = 0; k < tm.components.size(); ++k) {
        const auto& comp = tm.components[k];
        for (size_t i = 0; i < comp.points.size(); ++i) {
            const auto& p = comp.points[i];
            const SlotId f = T.edge_front(p.edge);
            slot_pts[f][p.pos] = {static_cast<int>(k), static_cast<long>(i)};
            const SlotId b = T.edge_back(p.edge);
            if (b >= 0) slot_pts[b][w[p.edge] - 1 - p.pos] = {static_cast<int>(k),
                                                             static_cast<long>(i)};
        }
    }

    // Per-triangle item circles.
    std::vector<std::vector<Item>> items(T.num_triangles());
    // item_of[slot][slotpos] = item index within the slot's triangle.
    std::vector<std::vector<int>> item_of(T.num_slots());
    for (int t = 0; t < T.num_triangles(); ++t) {
        auto& circle = items[t];
        for (int s = 0; s < 3; ++s) {
            circle.push_back(Item{true, s, -1, -1, s});
            const SlotId slot = make_slot(t, s);
            item_of[slot].clear();
            for (const auto& [pc, pi] : slot_pts[slot]) {
                item_of[slot].push_back(static_cast<int>(circle.size()));
                circle.push_back(Item{false, -1, pc, pi, s});
            }
        }
    }

    // Chords per triangle, with nesting.
    std::vector<std::vector<ChordRec>> chords(T.num_triangles());
    auto slotpos_of = [&](const StrandPoint& p, SlotId s) -> long {
        return T.edge_front(p.edge) == s ? p.pos : w[p.edge] - 1 - p.pos;
    };
    for (size_t k = 0; k < tm.components.size(); ++k) {
        const auto& comp = tm.components[k];
        const size_t n = comp.points.size();
        for (size_t j = 0; j < n; ++j) {
            const int t = comp.tris[j];
            const SlotId in_slot = comp.in_slots[j];
            const SlotId exit_slot = T.partner(comp.in_slots[(j + 1) % n]);
            if (slot_tri(exit_slot) != t) throw InternalError("cut: chord slot mismatch");
            const int a = item_of[in_slot][slotpos_of(comp.points[j], in_slot)];
            const int b = item_of[exit_slot][slotpos_of(comp.points[(j + 1) % n], exit_slot)];
            ChordRec rec;
            rec.from = a;
            rec.to = b;
            rec.lo = std::min(a, b);
            rec.hi = std::max(a, b);
            rec.comp = static_cast<int>(k);
            rec.idx = static_cast<long>(j);
            chords[t].push_back(rec);
        }
    }
    for (int t = 0; t < T.num_triangles(); ++t) {
        auto& ch = chords[t];
        for (size_t x = 0; x < ch.size(); ++x) {
            int best = -1;
            for (size_t y = 0; y < ch.size(); ++y) {
                if (x == y) continue;
                if (ch[y].lo < ch[x].lo && ch[x].hi < ch[y].hi) {
                    if (best < 0 || ch[y].hi - ch[y].lo < ch[best].hi - ch[best].lo)
                        best = static_cast<int>(y);
                }
            }
            ch[x].parent = best;
        }
    }

    // Build cells.
    std::vector<Cell> cells;
    for (int t = 0; t < T.num_triangles(); ++t) {
        const auto& circle = items[t];
        const int K = static_cast<int>(circle.size());
        const auto& ch = chords[t];
        // child chord starting (lo) at a given item, for a given parent.
        auto child_at = [&](int item, int parent) -> int {
            for (size_t y = 0; y < ch.size(); ++y)
                if (ch[y].parent == parent && ch[y].lo == item) return static_cast<int>(y);
            return -1;
        };
        auto gap_token = [&](int item_idx) -> PolySide {
            // Gap following item `item_idx`, on the side that item sits on.
            const Item& it = circle[item_idx];
            const SlotId slot = make_slot(t, it.side);
            const int e = T.edge_of(slot);
            long sub;
            if (it.is_corner) {
                sub = 0;
            } else {
                // slot position of this point on its side
                long sp = -1;
                for (size_t z = 0; z < item_of[slot].size(); ++z)
                    if (item_of[slot][z] == item_idx) sp = static_cast<long>(z);
                sub = sp + 1;
            }
            PolySide s;
            s.kind = PolySide::kGap;
            s.edge = e;
            s.front_sub = (T.edge_front(e) == slot) ? sub : w[e] - sub;
            return s;
        };
        // Chord y seen from the cell whose representative gap index is g
        // (gap g is the arc between items g and g+1 mod K).
        auto chord_token = [&](int y, int rep_gap) -> PolySide {
            PolySide s;
            s.kind = PolySide::kChord;
            s.comp = ch[y].comp;
            s.chord = ch[y].idx;
            // gap in ccw arc from `from` to `to` => right side (1).
            const int a = ch[y].from, b = ch[y].to;
            bool in_arc;
            if (a < b)
                in_arc = (rep_gap >= a && rep_gap < b);
            else
                in_arc = (rep_gap >= a || rep_gap < b);
            s.curve_side = in_arc ? 1 : 0;
            return s;
        };

        // Walks the item circle from `begin` to `end` at nesting level
        // `parent`, collecting sides and vertices; `closing` is the cell's
        // own chord or -1 for the root cell.
        auto build_cell = [&](int begin, int end, int parent, int closing) {
            Cell cell;
            cell.tri = t;
            std::vector<std::pair<bool, int>> walk;  // (is_chord, chord id / gap idx)
            int k = begin;
            int first_gap = -1;
            do {
                cell.vertices.push_back(circle[k]);
                const int child = child_at(k, parent);
                if (child >= 0) {
                    walk.push_back({true, child});
                    k = ch[child].hi;
                } else {
                    walk.push_back({false, k});
                    if (first_gap < 0) first_gap = k;
                    k = (k + 1) % K;
                }
            } while (k != end);
            if (closing >= 0) {
                cell.vertices.push_back(circle[end]);
                if (first_gap < 0) throw InternalError("cut: cell without a gap side");
            }
            for (const auto& [is_chord, id] : walk)
                cell.sides.push_back(is_chord ? chord_token(id, first_gap) : gap_token(id));
            if (closing >= 0) cell.sides.push_back(chord_token(closing, first_gap));
            if (cell.sides.size() < 3) throw InternalError("cut: degenerate cell");
            cells.push_back(std::move(cell));
        };

        build_cell(0, 0, -1, -1);  // root cell: full circle
        for (size_t y = 0; y < ch.size(); ++y)
            build_cell(ch[y].lo, ch[y].hi, static_cast<int>(y), static_cast<int>(y));
    }

    // Fan-triangulate every cell into a global complex.
    const int num_cells = static_cast<int>(cells.size());
    std::vector<int> cell_tri0(num_cells);  // first global triangle of each cell
    int total_tris = 0;
    for (int ci = 0; ci < num_cells; ++ci) {
        cell_tri0[ci] = total_tris;
        total_tris += static_cast<int>(cells[ci].sides.size()) - 2;
    }
    std::vector<SlotId> glued(total_tris * 3, -1);
    auto glue = [&](SlotId a, SlotId b) {
        if (glued[a] >= 0 || glued[b] >= 0) throw InternalError("cut: double gluing");
        glued[a] = b;
        glued[b] = a;
    };
    // Slot carrying polygon side k of cell ci.
    auto side_slot = [&](int ci, int k) -> SlotId {
        const int n = static_cast<int>(cells[ci].sides.size());
        const int t0 = cell_tri0[ci];
        if (k == 0) return make_slot(t0, 0);
        if (k == n - 1) return make_slot(t0 + n - 3, 2);
        return make_slot(t0 + k - 1, 1);
    };
    // Fan corner carrying polygon vertex k of cell ci.
    auto vertex_corner = [&](int ci, int k) -> int {
        const int n = static_cast<int>(cells[ci].sides.size());
        const int t0 = cell_tri0[ci];
        if (k == 0) return make_slot(t0, 0);
        if (k == n - 1) return make_slot(t0 + n - 3, 2);
        return make_slot(t0 + k - 1, 1);
    };
    for (int ci = 0; ci < num_cells; ++ci) {
        const int n = static_cast<int>(cells[ci].sides.size());
        const int t0 = cell_tri0[ci];
        for (int i = 0; i + 1 < n - 2; ++i) glue(make_slot(t0 + i, 2), make_slot(t0 + i + 1, 0));
    }

    // Glue gap sides across edges; collect boundary tags.
    std::map<std::pair<int, long>, SlotId> open_gap;
    struct BoundaryTag {
        bool is_curve;
        int comp = -1, curve_side = -1;
        int exterior_circle = -1;  // 0-based circle of the ambient surface
    };
    std::map<SlotId, BoundaryTag> tags;
    for (int ci = 0; ci < num_cells; ++ci) {
        for (size_t k = 0; k < cells[ci].sides.size(); ++k) {
            const PolySide& s = cells[ci].sides[k];
            const SlotId slot = side_slot(ci, static_cast<int>(k));
            if (s.kind == PolySide::kChord) {
                tags[slot] = BoundaryTag{true, s.comp, s.curve_side, -1};
                continue;
            }
            const auto key = std::make_pair(s.edge, s.front_sub);
            auto it = open_gap.find(key);
            if (it == open_gap.end()) {
                open_gap.emplace(key, slot);
            } else {
                glue(slot, it->second);
                open_gap.erase(it);
            }
        }
    }
    for (const auto& [key, slot] : open_gap) {
        if (!T.is_boundary_edge(key.first))
            throw InternalError("cut: unmatched gap on interior edge");
        tags[slot] = BoundaryTag{false, -1, -1, T.boundary_circle_of(T.edge_front(key.first))};
    }

    // Split into connected components.
    UnionFind uf(total_tris);
    for (SlotId s = 0; s < total_tris * 3; ++s)
        if (glued[s] >= 0) uf.unite(s / 3, glued[s] / 3);
    std::map<int, int> piece_of_root;
    std::vector<std::vector<int>> piece_tris;  // global triangles per piece
    std::vector<int> local_tri(total_tris, -1);
    std::vector<int> piece_idx(total_tris, -1);
    for (int t = 0; t < total_tris; ++t) {
        const int root = uf.find(t);
        auto [it, fresh] = piece_of_root.try_emplace(root, static_cast<int>(piece_tris.size()));
        if (fresh) piece_tris.push_back({});
        piece_idx[t] = it->second;
        local_tri[t] = static_cast<int>(piece_tris[it->second].size());
        piece_tris[it->second].push_back(t);
    }
    const int num_pieces = static_cast<int>(piece_tris.size());

    // Interior vertex marks: one corner per ambient puncture/ghost vertex.
    std::vector<std::vector<int>> piece_punctures(num_pieces);
    std::vector<int> piece_ghost(num_pieces, -1);
    std::vector<bool> vertex_done(T.num_vertices(), false);
    for (int ci = 0; ci < num_cells; ++ci) {
        for (size_t k = 0; k < cells[ci].vertices.size(); ++k) {
            const Item& it = cells[ci].vertices[k];
            if (!it.is_corner) continue;
            const int v = T.vertex_at(cells[ci].tri, it.corner);
            if (vertex_done[v]) continue;
            const VertexKind kind = T.vertex_kind(v);
            if (kind == VertexKind::boundary) continue;
            vertex_done[v] = true;
            const int global_corner = vertex_corner(ci, static_cast<int>(k));
            const int gt = global_corner / 3;
            const int local = make_slot(local_tri[gt], global_corner % 3);
            if (kind == VertexKind::puncture)
                piece_punctures[piece_idx[gt]].push_back(local);
            else
                piece_ghost[piece_idx[gt]] = local;
        }
    }

    CutResult out;
    for (int p = 0; p < num_pieces; ++p) {
        const int nt = static_cast<int>(piece_tris[p].size());
        std::vector<SlotId> local_glued(nt * 3, -1);
        for (int lt = 0; lt < nt; ++lt) {
            const int gt = piece_tris[p][lt];
            for (int s = 0; s < 3; ++s) {
                const SlotId gp = glued[make_slot(gt, s)];
                if (gp >= 0) local_glued[make_slot(lt, s)] =
                    make_slot(local_tri[gp / 3], gp % 3);
            }
        }
        Triangulation piece(nt, std::move(local_glued), piece_punctures[p], piece_ghost[p]);
        std::vector<CircleProvenance> prov;
        for (int k = 0; k < piece.num_boundary_circles(); ++k) {
            const SlotId ls = piece.boundary_circle(k)[0];
            const SlotId gs = make_slot(piece_tris[p][slot_tri(ls)], slot_side(ls));
            const auto tag_it = tags.find(gs);
            if (tag_it == tags.end()) throw InternalError("cut: untagged boundary slot");
            const BoundaryTag& tag = tag_it->second;
            if (tag.is_curve)
                prov.push_back(CurveSide{tag.comp, tag.curve_side});
            else
                prov.push_back(ExteriorLabel{tag.exterior_circle + 1});
        }
        out.pieces.push_back(std::move(piece));
        out.provenance.push_back(std::move(prov));
    }

    // Sanity: Euler characteristic is preserved and every curve side
    // appears exactly once.
    int chi = 0;
    for (const auto& piece : out.pieces) chi += piece.euler_characteristic();
    if (chi != T.euler_characteristic()) throw InternalError("cut: Euler characteristic changed");
    std::map<std::pair<int, int>, int> side_count;
    for (const auto& prov : out.provenance)
        for (const auto& cp : prov)
            if (const auto* cs = std::get_if<CurveSide>(&cp))
                ++side_count[{cs->component, cs->side}];
    for (size_t k = 0; k < tm.components.size(); ++k)
        for (int side = 0; side < 2; ++side)
            if (side_count[{static_cast<int>(k), side}] != 1)
                throw InternalError("cut: bad curve side multiplicity");
    return out;
}

}  // namespace curvex

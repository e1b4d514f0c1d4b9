#include "curvex/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <utility>

namespace curvex::detail {

Rat boundary_coord(const Triangulation& T, const DPoint& p, SlotId slot) {
    const Rat par = (T.edge_front(p.edge) == slot) ? p.u : Rat(1) - p.u;
    return Rat(slot_side(slot)) + par;
}

Rat ccw_dist(const Rat& from, const Rat& to) {
    Rat r = to - from;
    if (r < 0) r += 3;
    return r;
}

namespace {

Rat coord_of(const Triangulation& T, const DPoint& p, SlotId slot) {
    return boundary_coord(T, p, slot);
}

Rat arc_dist(const Rat& from, const Rat& to) { return ccw_dist(from, to); }

struct ChordEnds {
    DPoint p, q;
    SlotId sp, sq;  // slots of p and q within the chord's triangle
};

ChordEnds chord_ends(const Triangulation& T, const DComp& c, int idx) {
    const int nn = static_cast<int>(c.size());
    const int j2 = (idx + 1) % nn;
    return {c.pts[idx], c.pts[j2], c.in_slots[idx], T.partner(c.in_slots[j2])};
}

/// Two chords of one triangle cross iff their endpoints interleave on the
/// boundary circle.  Chords sharing an endpoint never cross.
bool chords_cross(const Triangulation& T, const ChordEnds& u, const ChordEnds& v) {
    if (u.p == v.p || u.p == v.q || u.q == v.p || u.q == v.q) return false;
    const Rat cp = coord_of(T, u.p, u.sp);
    const Rat cq = coord_of(T, u.q, u.sq);
    const Rat dq = arc_dist(cp, cq);
    const bool in1 = arc_dist(cp, coord_of(T, v.p, v.sp)) < dq;
    const bool in2 = arc_dist(cp, coord_of(T, v.q, v.sq)) < dq;
    return in1 != in2;
}

/// Order key of the crossing with `other` along `host`, measured from
/// host's start: the crossing chords are pairwise disjoint, so they are
/// met in the order of their endpoints inside the start-to-end arc.
Rat cross_key(const Triangulation& T, const ChordEnds& host, const ChordEnds& other) {
    const Rat cp = coord_of(T, host.p, host.sp);
    const Rat dq = arc_dist(cp, coord_of(T, host.q, host.sq));
    const Rat dr = arc_dist(cp, coord_of(T, other.p, other.sp));
    const Rat ds = arc_dist(cp, coord_of(T, other.q, other.sq));
    return (dr < dq) ? dr : ds;
}

struct Crossing {
    int ac, ai;  // a component and chord
    int bc, bi;  // b component and chord
};

std::vector<Crossing> all_crossings(const Diagram& d) {
    const Triangulation& T = *d.T;
    std::vector<std::vector<std::array<int, 3>>> by_tri(T.num_triangles());
    for (int fam = 0; fam < 2; ++fam) {
        const auto& comps = fam == 0 ? d.a : d.b;
        for (int c = 0; c < static_cast<int>(comps.size()); ++c)
            for (int j = 0; j < static_cast<int>(comps[c].size()); ++j)
                by_tri[comps[c].tris[j]].push_back({fam, c, j});
    }
    std::vector<Crossing> out;
    for (const auto& lst : by_tri)
        for (const auto& x : lst) {
            if (x[0] != 0) continue;
            for (const auto& y : lst) {
                if (y[0] != 1) continue;
                if (chords_cross(T, chord_ends(T, d.a[x[1]], x[2]),
                                 chord_ends(T, d.b[y[1]], y[2])))
                    out.push_back({x[1], x[2], y[1], y[2]});
            }
        }
    return out;
}

/// Crossings hosted by component bc of family b, in traversal order.
std::vector<Crossing> ordered_along_b(const Triangulation& T, const Diagram& d,
                                      const std::vector<Crossing>& all, int bc) {
    std::vector<std::tuple<int, Rat, Crossing>> keyed;
    for (const Crossing& c : all) {
        if (c.bc != bc) continue;
        const ChordEnds host = chord_ends(T, d.b[bc], c.bi);
        keyed.emplace_back(c.bi, cross_key(T, host, chord_ends(T, d.a[c.ac], c.ai)), c);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        return std::get<1>(x) < std::get<1>(y);
    });
    std::vector<Crossing> out;
    for (auto& [bi, key, c] : keyed) out.push_back(c);
    return out;
}

template <typename F>
void for_each_point(const Diagram& d, F&& f) {
    for (const auto* fam : {&d.a, &d.b})
        for (const auto& c : *fam)
            for (const auto& p : c.pts) f(p);
}

long points_strictly_between(const Diagram& d, int edge, const Rat& u1, const Rat& u2) {
    const Rat& lo = std::min(u1, u2);
    const Rat& hi = std::max(u1, u2);
    long n = 0;
    for_each_point(d, [&](const DPoint& p) {
        if (p.edge == edge && lo < p.u && p.u < hi) ++n;
    });
    return n;
}

/// Nearest point position strictly beyond `from` in direction dir (+1/-1)
/// on the given edge, or the edge end (0 or 1) if none.
Rat beyond(const Diagram& d, int edge, const Rat& from, int dir) {
    std::optional<Rat> best;
    for_each_point(d, [&](const DPoint& p) {
        if (p.edge != edge) return;
        if ((p.u - from) * dir <= 0) return;
        if (!best || (p.u - *best) * dir < 0) best = p.u;
    });
    return best ? *best : Rat(dir > 0 ? 1 : 0);
}

/// If the consecutive crossings x, y bound an empty bigon (the subarcs
/// between them run through the same triangles with nothing in between),
/// slides the b-side across the a-side, removing both crossings.
bool try_channel(Diagram& d, const Crossing& x, const Crossing& y, Budget& budget) {
    if (x.ac != y.ac || x.bc != y.bc) return false;
    DComp& B = d.b[x.bc];
    const DComp& A = d.a[x.ac];
    const int nB = static_cast<int>(B.size());
    const int nA = static_cast<int>(A.size());
    const int k = ((y.bi - x.bi) % nB + nB) % nB;
    if (k == 0) return false;
    for (int forward = 1; forward >= 0; --forward) {
        const int span = forward ? ((y.ai - x.ai) % nA + nA) % nA
                                 : ((x.ai - y.ai) % nA + nA) % nA;
        if (span != k) continue;
        bool ok = true;
        std::vector<int> qi(k), pi(k);
        for (int t = 1; t <= k && ok; ++t) {
            qi[t - 1] = (x.bi + t) % nB;
            pi[t - 1] = forward ? (x.ai + t) % nA : ((x.ai + 1 - t) % nA + nA) % nA;
            const DPoint& q = B.pts[qi[t - 1]];
            const DPoint& p = A.pts[pi[t - 1]];
            if (q.edge != p.edge) {
                ok = false;
                break;
            }
            // The parallel strands must run through the same slots, not
            // merely the same edges (an edge may meet a triangle twice).
            const SlotId bslot = B.in_slots[qi[t - 1]];
            const SlotId aslot = forward ? A.in_slots[pi[t - 1]]
                                         : d.T->partner(A.in_slots[pi[t - 1]]);
            if (bslot != aslot) {
                ok = false;
                break;
            }
            if (points_strictly_between(d, q.edge, q.u, p.u) != 0) ok = false;
        }
        if (!ok) continue;
        budget.spend("bigon reduction");
        for (int t = 0; t < k; ++t) {
            DPoint& q = B.pts[qi[t]];
            const DPoint& p = A.pts[pi[t]];
            const int dir = p.u > q.u ? 1 : -1;
            q.u = (p.u + beyond(d, p.edge, p.u, dir)) / 2;
        }
        return true;
    }
    return false;
}

}  // namespace

Diagram make_diagram(const Triangulation& T, const std::vector<long>& wa,
                     const std::vector<long>& wb) {
    Diagram d;
    d.T = &T;
    const SurfaceRef ref(&T, [](const Triangulation*) {});
    const auto build = [&](const std::vector<long>& w, bool offset) {
        const TracedMulticurve tm = trace(validate(ref, w));
        std::vector<DComp> out;
        for (const auto& c : tm.components) {
            DComp dc;
            dc.tris = c.tris;
            dc.in_slots = c.in_slots;
            for (const auto& sp : c.points) {
                Rat u = Rat(sp.pos + 1) / Rat(w[sp.edge] + 1);
                if (offset)
                    u += Rat(1) / (Rat(2) * Rat(wa[sp.edge] + 1) * Rat(wb[sp.edge] + 1));
                dc.pts.push_back({sp.edge, u});
            }
            out.push_back(std::move(dc));
        }
        return out;
    };
    d.a = build(wa, false);
    d.b = build(wb, true);
    return d;
}

long count_crossings(const Diagram& d) {
    return static_cast<long>(all_crossings(d).size());
}

long reduce_to_minimal(Diagram& d, Budget& budget) {
    while (true) {
        const std::vector<Crossing> all = all_crossings(d);
        if (all.empty()) break;
        bool slid = false;
        for (int bc = 0; bc < static_cast<int>(d.b.size()) && !slid; ++bc) {
            const std::vector<Crossing> ord = ordered_along_b(*d.T, d, all, bc);
            const int m = static_cast<int>(ord.size());
            if (m < 2) continue;
            for (int s = 0; s < m && !slid; ++s)
                slid = try_channel(d, ord[s], ord[(s + 1) % m], budget);
        }
        if (!slid) break;
        if (count_crossings(d) >= static_cast<long>(all.size()))
            throw InternalError("bigon reduction made no progress");
    }
    return count_crossings(d);
}

void tighten_family(const Triangulation& T, std::vector<DComp>& family, Budget& budget) {
    const auto between_count = [&](int edge, const Rat& u1, const Rat& u2) {
        const Rat& lo = std::min(u1, u2);
        const Rat& hi = std::max(u1, u2);
        long n = 0;
        for (const auto& c : family)
            for (const auto& p : c.pts)
                if (p.edge == edge && lo < p.u && p.u < hi) ++n;
        return n;
    };
    while (true) {
        int best_c = -1, best_j = -1;
        long best_n = -1;
        for (int ci = 0; ci < static_cast<int>(family.size()); ++ci) {
            const DComp& c = family[ci];
            const int nn = static_cast<int>(c.size());
            for (int j = 0; j < nn; ++j) {
                const int j2 = (j + 1) % nn;
                if (c.in_slots[j] != T.partner(c.in_slots[j2])) continue;  // not a return
                const long b = between_count(c.pts[j].edge, c.pts[j].u, c.pts[j2].u);
                if (best_n < 0 || b < best_n) {
                    best_n = b;
                    best_c = ci;
                    best_j = j;
                }
            }
        }
        if (best_c < 0) break;
        if (best_n != 0) throw InternalError("tighten: no innermost return");
        budget.spend("return removal");
        DComp& c = family[best_c];
        const int nn = static_cast<int>(c.size());
        if (nn == 2) {
            family.erase(family.begin() + best_c);
            continue;
        }
        const int j = best_j, j2 = (j + 1) % nn, jprev = (j + nn - 1) % nn;
        if (c.tris[jprev] != c.tris[j2]) throw InternalError("tighten: mismatched merge");
        DComp out;
        for (int s = 0; s < nn; ++s) {
            if (s == j || s == j2) continue;
            out.pts.push_back(c.pts[s]);
            out.tris.push_back(c.tris[s]);
            out.in_slots.push_back(c.in_slots[s]);
        }
        c = std::move(out);
    }
}

std::vector<long> family_weights(const Triangulation& T, const std::vector<DComp>& family) {
    std::vector<long> w(T.num_edges(), 0);
    for (const auto& c : family)
        for (const auto& p : c.pts) ++w[p.edge];
    return w;
}

void assert_embedded(const Triangulation& T, const std::vector<DComp>& family,
                     const char* where) {
    std::vector<std::vector<std::pair<int, int>>> by_tri(T.num_triangles());
    for (int c = 0; c < static_cast<int>(family.size()); ++c)
        for (int j = 0; j < static_cast<int>(family[c].size()); ++j)
            by_tri[family[c].tris[j]].push_back({c, j});
    for (const auto& lst : by_tri)
        for (size_t x = 0; x < lst.size(); ++x)
            for (size_t y = x + 1; y < lst.size(); ++y)
                if (chords_cross(T, chord_ends(T, family[lst[x].first], lst[x].second),
                                 chord_ends(T, family[lst[y].first], lst[y].second)))
                    throw InternalError(where);
}

std::vector<long> twist_image(const Triangulation& T, const std::vector<long>& wa, long n,
                              const std::vector<long>& wb, Budget& budget) {
    Diagram d = make_diagram(T, wa, wb);
    reduce_to_minimal(d, budget);
    const std::vector<Crossing> cross = all_crossings(d);
    if (n == 0 || cross.empty()) return family_weights(T, d.b);
    if (d.a.size() != 1) throw InternalError("twist along a multicurve");
    const DComp& A = d.a[0];
    const int L = static_cast<int>(A.size());
    const long nL = n * static_cast<long>(L);

    // Rails of the twisting corridor: halfway between each point of a and
    // its nearest neighbour on either side along the edge.
    std::vector<Rat> leftpos(L), rightpos(L);
    for (int v = 0; v < L; ++v) {
        const DPoint& p = A.pts[v];
        // Within a positively oriented triangle, increasing position along
        // the entered side points to the traveller's right.
        const int dir_left = (T.edge_front(p.edge) == A.in_slots[v]) ? -1 : 1;
        leftpos[v] = (p.u + beyond(d, p.edge, p.u, dir_left)) / 2;
        rightpos[v] = (p.u + beyond(d, p.edge, p.u, -dir_left)) / 2;
    }

    // Horizontal offset of each crossing along its a-chord: the per-chord
    // rank, perturbed so all offsets are globally distinct.
    const int G = static_cast<int>(cross.size());
    std::vector<Rat> f(G);
    std::map<int, std::vector<int>> by_ai;
    for (int g = 0; g < G; ++g) by_ai[cross[g].ai].push_back(g);
    const Rat denom = Rat(G + 2) * Rat(G + 2) * Rat(G + 2);
    int gidx = 0;
    for (auto& [ai, lst] : by_ai) {
        const ChordEnds host = chord_ends(T, A, ai);
        std::sort(lst.begin(), lst.end(), [&](int x, int y) {
            return cross_key(T, host, chord_ends(T, d.b[cross[x].bc], cross[x].bi)) <
                   cross_key(T, host, chord_ends(T, d.b[cross[y].bc], cross[y].bi));
        });
        const int cnt = static_cast<int>(lst.size());
        for (int r = 0; r < cnt; ++r) {
            f[lst[r]] = Rat(r + 1) / Rat(cnt + 1) + Rat(gidx + 1) / denom;
            ++gidx;
        }
    }

    // Which side of the directed a-chord each b-strand enters from: the
    // left of a chord is the ccw boundary arc from its head to its tail.
    std::vector<bool> from_left(G);
    for (int g = 0; g < G; ++g) {
        const Crossing& c = cross[g];
        const int i = c.ai, i1 = (i + 1) % L;
        const Rat cfrom = coord_of(T, A.pts[i], A.in_slots[i]);
        const Rat cto = coord_of(T, A.pts[i1], T.partner(A.in_slots[i1]));
        const DComp& B = d.b[c.bc];
        const Rat cb = coord_of(T, B.pts[c.bi], B.in_slots[c.bi]);
        from_left[g] = arc_dist(cto, cb) < arc_dist(cto, cfrom);
    }

    std::map<std::pair<int, int>, std::vector<int>> by_bchord;
    for (int g = 0; g < G; ++g) by_bchord[{cross[g].bc, cross[g].bi}].push_back(g);
    for (auto& [key, lst] : by_bchord) {
        const ChordEnds host = chord_ends(T, d.b[key.first], key.second);
        std::sort(lst.begin(), lst.end(), [&](int x, int y) {
            return cross_key(T, host, chord_ends(T, A, cross[x].ai)) <
                   cross_key(T, host, chord_ends(T, A, cross[y].ai));
        });
    }

    // Replace every crossing strand by a path winding n times around the
    // corridor: straight lines of slope 1/(nL) in (horizontal, depth)
    // coordinates, realised on edges by interpolating between the rails.
    std::vector<DComp> result;
    for (int bc = 0; bc < static_cast<int>(d.b.size()); ++bc) {
        const DComp& B = d.b[bc];
        DComp nb;
        const int nB = static_cast<int>(B.size());
        for (int bi = 0; bi < nB; ++bi) {
            nb.pts.push_back(B.pts[bi]);
            nb.tris.push_back(B.tris[bi]);
            nb.in_slots.push_back(B.in_slots[bi]);
            const auto it = by_bchord.find({bc, bi});
            if (it == by_bchord.end()) continue;
            const int tx = B.tris[bi];
            for (const int g : it->second) {
                const int i = cross[g].ai;
                std::vector<long> verts;  // ascending depth
                if (n > 0)
                    for (long j = i + 1; j <= i + nL; ++j) verts.push_back(j);
                else
                    for (long j = i; j >= i + nL + 1; --j) verts.push_back(j);
                if (!from_left[g]) std::reverse(verts.begin(), verts.end());
                for (size_t k = 0; k < verts.size(); ++k) {
                    const long j = verts[k];
                    const int v = static_cast<int>(((j % L) + L) % L);
                    const Rat t = (Rat(j - i) - f[g]) / Rat(nL);
                    const DPoint pt{A.pts[v].edge,
                                    (Rat(1) - t) * leftpos[v] + t * rightpos[v]};
                    int tri;
                    SlotId slot;
                    if (k + 1 < verts.size()) {
                        const long m = std::min(j, verts[k + 1]);
                        const int vm = static_cast<int>(((m % L) + L) % L);
                        tri = A.tris[vm];
                        slot = (verts[k + 1] > j) ? A.in_slots[vm]
                                                  : T.partner(A.in_slots[(vm + 1) % L]);
                    } else {
                        tri = tx;
                        const long jm = ((j - i) % L + L) % L;
                        if (jm == 0)
                            slot = A.in_slots[i];
                        else if (jm == 1)
                            slot = T.partner(A.in_slots[(i + 1) % L]);
                        else
                            throw InternalError("twist: stray corridor exit");
                    }
                    nb.pts.push_back(pt);
                    nb.tris.push_back(tri);
                    nb.in_slots.push_back(slot);
                }
            }
        }
        result.push_back(std::move(nb));
    }
    assert_embedded(T, result, "twist image not embedded");
    tighten_family(T, result, budget);
    return family_weights(T, result);
}

}  // namespace curvex::detail

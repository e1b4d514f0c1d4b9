#include "curvex/regions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace curvex::detail {
namespace {

struct TriCells {
    std::vector<Rat> events;         // sorted endpoint coords
    std::vector<int> cell_of_interval;  // size max(1, events.size())

    int cell_at(const Rat& coord) const {
        if (events.empty()) return cell_of_interval[0];
        // interval k runs ccw from events[k] to events[k+1] (cyclically)
        const auto it = std::upper_bound(events.begin(), events.end(), coord);
        if (it == events.begin() || it == events.end())
            return cell_of_interval[events.size() - 1];
        return cell_of_interval[it - events.begin() - 1];
    }

    int interval_index_of_event(const Rat& coord) const {
        const auto it = std::lower_bound(events.begin(), events.end(), coord);
        if (it == events.end() || *it != coord)
            throw InternalError("region graph: missing chord endpoint");
        return static_cast<int>(it - events.begin());
    }
};

}  // namespace

RegionGraph build_region_graph(const Triangulation& T, const std::vector<long>& weights) {
    RegionGraph rg;
    rg.T = &T;
    rg.fam = make_diagram(T, weights, std::vector<long>(T.num_edges(), 0)).a;

    struct TriChord {
        int comp, chord;
        Rat tail, head;  // boundary coords of the endpoints
    };
    std::vector<std::vector<TriChord>> chords_in(T.num_triangles());
    for (int c = 0; c < static_cast<int>(rg.fam.size()); ++c) {
        const DComp& dc = rg.fam[c];
        const int nn = static_cast<int>(dc.size());
        for (int j = 0; j < nn; ++j) {
            const int j2 = (j + 1) % nn;
            const Rat tail = boundary_coord(T, dc.pts[j], dc.in_slots[j]);
            const Rat head = boundary_coord(T, dc.pts[j2], T.partner(dc.in_slots[j2]));
            chords_in[dc.tris[j]].push_back({c, j, tail, head});
        }
    }

    std::vector<TriCells> cells(T.num_triangles());
    for (int t = 0; t < T.num_triangles(); ++t) {
        TriCells& tc = cells[t];
        for (const TriChord& ch : chords_in[t]) {
            tc.events.push_back(ch.tail);
            tc.events.push_back(ch.head);
        }
        std::sort(tc.events.begin(), tc.events.end());
        if (tc.events.empty()) {
            tc.cell_of_interval = {rg.num_cells++};
            continue;
        }
        const int n = static_cast<int>(tc.events.size());
        std::map<std::vector<bool>, int> sig_cells;
        tc.cell_of_interval.resize(n);
        for (int k = 0; k < n; ++k) {
            Rat mid = (k + 1 < n) ? Rat((tc.events[k] + tc.events[k + 1]) / 2)
                                  : Rat((tc.events[n - 1] + tc.events[0] + 3) / 2);
            if (mid >= 3) mid -= 3;
            std::vector<bool> sig;
            sig.reserve(chords_in[t].size());
            for (const TriChord& ch : chords_in[t])
                sig.push_back(ccw_dist(ch.tail, mid) < ccw_dist(ch.tail, ch.head));
            const auto [it, fresh] = sig_cells.try_emplace(sig, rg.num_cells);
            if (fresh) ++rg.num_cells;
            tc.cell_of_interval[k] = it->second;
        }
    }

    for (int e = 0; e < T.num_edges(); ++e) {
        if (T.is_boundary_edge(e)) continue;
        const SlotId sf = T.edge_front(e), sb = T.edge_back(e);
        for (long g = 0; g <= weights[e]; ++g) {
            const Rat u = Rat(2 * g + 1) / Rat(2 * (weights[e] + 1));
            const DPoint pt{e, u};
            const int cf = cells[slot_tri(sf)].cell_at(boundary_coord(T, pt, sf));
            const int cb = cells[slot_tri(sb)].cell_at(boundary_coord(T, pt, sb));
            rg.gaps.push_back({cf, cb, e, g});
        }
    }

    for (int t = 0; t < T.num_triangles(); ++t) {
        const TriCells& tc = cells[t];
        const int n = static_cast<int>(tc.events.size());
        for (const TriChord& ch : chords_in[t]) {
            const int k = tc.interval_index_of_event(ch.tail);
            const int before = tc.cell_of_interval[(k + n - 1) % n];
            const int after = tc.cell_of_interval[k];
            rg.crossings.push_back({before, after, ch.comp, ch.chord});
        }
    }
    return rg;
}

std::vector<long> realize_cycle(const RegionGraph& rg, const std::vector<GapUse>& walk,
                                Budget& budget) {
    const Triangulation& T = *rg.T;
    const int n = static_cast<int>(walk.size());
    for (int j = 0; j < n; ++j) {
        const GapUse& next = walk[(j + 1) % n];
        if (slot_tri(T.partner(next.entered)) != slot_tri(walk[j].entered))
            throw InternalError("region walk: disconnected transit");
    }

    // Walks may pass through one gap interval twice; the two strands then
    // need distinct edge coordinates, and their vertical order is not
    // determined by the walk.  Try both orders per doubled gap and keep
    // the first embedded realization.
    std::vector<long> max_gap(T.num_edges(), 0);
    for (const RegionGraph::GapArc& ga : rg.gaps) max_gap[ga.edge] = std::max(max_gap[ga.edge], ga.gap);
    std::vector<int> twin(n, -1), flip_bit(n, -1);
    int doubled = 0;
    for (int j = 0; j < n; ++j) {
        if (twin[j] >= 0) continue;
        int count = 0;
        for (int j2 = j + 1; j2 < n; ++j2)
            if (walk[j2].edge == walk[j].edge && walk[j2].gap == walk[j].gap) {
                if (++count > 1) throw InternalError("region walk: gap used more than twice");
                twin[j] = j2;
                twin[j2] = j;
                flip_bit[j] = doubled++;
            }
    }
    if (doubled > 12) throw InternalError("region walk: too many doubled gaps");

    for (unsigned mask = 0; mask < (1u << doubled); ++mask) {
        budget.spend("region walk realization");
        DComp dc;
        for (int j = 0; j < n; ++j) {
            const GapUse& gu = walk[j];
            const long w = max_gap[gu.edge];
            long num = 3 * gu.gap + 1;  // lone strand or lower third of the gap
            if (twin[j] >= 0) {
                const int bit = flip_bit[j] >= 0 ? flip_bit[j] : flip_bit[twin[j]];
                const bool high = ((mask >> bit) & 1u) ^ (flip_bit[j] < 0);
                if (high) ++num;
            } else {
                num = 2 * gu.gap + 1;
            }
            dc.pts.push_back({gu.edge, twin[j] >= 0 ? Rat(num) / Rat(3 * (w + 1))
                                                    : Rat(num) / Rat(2 * (w + 1))});
            dc.tris.push_back(slot_tri(gu.entered));
            dc.in_slots.push_back(gu.entered);
        }
        std::vector<DComp> family{std::move(dc)};
        try {
            assert_embedded(T, family, "region walk not embedded");
        } catch (const InternalError&) {
            continue;
        }
        tighten_family(T, family, budget);
        return family_weights(T, family);
    }
    throw InternalError("region walk not embedded");
}

std::vector<std::vector<long>> simple_gap_cycles(const RegionGraph& rg, size_t max_count,
                                                 Budget& budget) {
    const Triangulation& T = *rg.T;
    std::vector<std::vector<std::pair<int, bool>>> adj(rg.num_cells);  // (arc, front->back)
    for (int i = 0; i < static_cast<int>(rg.gaps.size()); ++i) {
        adj[rg.gaps[i].cell_front].push_back({i, true});
        adj[rg.gaps[i].cell_back].push_back({i, false});
    }
    const auto entered_slot = [&](int arc, bool front_to_back) {
        const int e = rg.gaps[arc].edge;
        return front_to_back ? T.edge_back(e) : T.edge_front(e);
    };

    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> out;
    // Closes gap arc i through the complement, detouring around arc j
    // (j = i: no detour); detours reach homotopy classes the shortest
    // closure misses.
    const auto attempt = [&](int i, int j, int k) {
        const int src = rg.gaps[i].cell_back, dst = rg.gaps[i].cell_front;
        std::vector<int> prev_cell(rg.num_cells, -1);
        std::vector<std::pair<int, bool>> prev_arc(rg.num_cells, {-1, false});
        std::queue<int> bfs;
        bfs.push(src);
        prev_cell[src] = src;
        while (!bfs.empty()) {
            const int c = bfs.front();
            bfs.pop();
            for (const auto& [arc, dir] : adj[c]) {
                if (arc == i || arc == j || arc == k) continue;
                const int to = dir ? rg.gaps[arc].cell_back : rg.gaps[arc].cell_front;
                if (prev_cell[to] >= 0) continue;
                prev_cell[to] = c;
                prev_arc[to] = {arc, dir};
                bfs.push(to);
            }
        }
        if (src != dst && prev_cell[dst] < 0) return;
        std::vector<GapUse> walk{{rg.gaps[i].edge, rg.gaps[i].gap, entered_slot(i, true)}};
        std::vector<GapUse> tail;
        for (int c = dst; c != src; c = prev_cell[c]) {
            const auto& [arc, dir] = prev_arc[c];
            tail.push_back({rg.gaps[arc].edge, rg.gaps[arc].gap, entered_slot(arc, dir)});
        }
        std::reverse(tail.begin(), tail.end());
        walk.insert(walk.end(), tail.begin(), tail.end());
        const std::vector<long> w = realize_cycle(rg, walk, budget);
        if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; })) return;
        if (seen.insert(w).second) out.push_back(w);
    };
    const int n_arcs = static_cast<int>(rg.gaps.size());
    for (int i = 0; i < n_arcs && out.size() < max_count; ++i) attempt(i, i, i);
    for (int i = 0; i < n_arcs && out.size() < max_count; ++i)
        for (int j = 0; j < n_arcs && out.size() < max_count; ++j)
            if (j != i) attempt(i, j, j);
    for (int i = 0; i < n_arcs && out.size() < max_count; ++i)
        for (int j = 0; j < n_arcs && out.size() < max_count; ++j)
            for (int k = j + 1; k < n_arcs && out.size() < max_count; ++k)
                if (j != i && k != i) attempt(i, j, k);
    return out;
}

std::vector<std::vector<long>> deep_gap_cycles(const RegionGraph& rg, size_t max_count,
                                               int max_len, Budget& budget) {
    const Triangulation& T = *rg.T;
    const int n_arcs = static_cast<int>(rg.gaps.size());
    std::vector<std::vector<std::pair<int, bool>>> adj(rg.num_cells);  // (arc, front->back)
    for (int k = 0; k < n_arcs; ++k) {
        adj[rg.gaps[k].cell_front].push_back({k, true});
        adj[rg.gaps[k].cell_back].push_back({k, false});
    }
    const auto entered_slot = [&](int arc, bool front_to_back) {
        const int e = rg.gaps[arc].edge;
        return front_to_back ? T.edge_back(e) : T.edge_front(e);
    };

    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> out;
    std::vector<int> used(n_arcs, 0);
    std::vector<GapUse> walk;

    // Cycles through the gap arcs with each arc used at most twice.  A
    // doubled arc carries two parallel strands of the realized curve, so
    // this reaches boundary-of-neighborhood curves that no simple cycle
    // gives.  Duplicate cycles are cut down by forcing the start arc to
    // be index-minimal.
    int start_cell = -1, start_arc = -1;
    const std::function<void(int)> dfs = [&](int cell) {
        if (out.size() >= max_count) return;
        budget.spend("gap cycle search");
        if (cell == start_cell && !walk.empty()) {
            try {
                std::vector<long> w = realize_cycle(rg, walk, budget);
                if (!std::all_of(w.begin(), w.end(), [](long x) { return x == 0; }) &&
                    seen.insert(w).second)
                    out.push_back(std::move(w));
            } catch (const InternalError&) {
            }
            if (out.size() >= max_count) return;
        }
        if (static_cast<int>(walk.size()) >= max_len) return;
        for (const auto& [arc, dir] : adj[cell]) {
            if (arc < start_arc || used[arc] >= 2) continue;
            ++used[arc];
            walk.push_back({rg.gaps[arc].edge, rg.gaps[arc].gap, entered_slot(arc, dir)});
            dfs(dir ? rg.gaps[arc].cell_back : rg.gaps[arc].cell_front);
            walk.pop_back();
            --used[arc];
        }
    };
    for (start_arc = 0; start_arc < n_arcs && out.size() < max_count; ++start_arc) {
        start_cell = rg.gaps[start_arc].cell_front;
        used[start_arc] = 1;
        walk.push_back({rg.gaps[start_arc].edge, rg.gaps[start_arc].gap,
                        entered_slot(start_arc, true)});
        dfs(rg.gaps[start_arc].cell_back);
        walk.pop_back();
        used[start_arc] = 0;
    }
    return out;
}

}  // namespace curvex::detail

#include "curvex/curve_ops.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "curvex/regions.hpp"

namespace curvex {
namespace {

using detail::Budget;

void require_same_surface(const NormalCoordinates& a, const NormalCoordinates& b) {
    if (!(*a.surface == *b.surface))
        throw SurfaceMismatch("operands live on different surfaces");
}

long intersection_impl(const NormalCoordinates& a, const NormalCoordinates& b,
                       Budget& budget) {
    require_same_surface(a, b);
    detail::Diagram d = detail::make_diagram(*a.surface, a.weights, b.weights);
    return detail::reduce_to_minimal(d, budget);
}

NormalCoordinates twist_impl(const NormalCoordinates& a, long n, const NormalCoordinates& b,
                             Budget& budget) {
    require_same_surface(a, b);
    GenericFamily fa;
    try {
        fa = as_generic_family(a);
    } catch (const NonGenericComponent& e) {
        throw NonGenericTwistCurve(e.what());
    } catch (const IsotopicPair& e) {
        throw NonGenericTwistCurve(e.what());
    }
    if (fa.r() != 1)
        throw NonGenericTwistCurve("twist curve must have exactly one component");
    return validate(b.surface, detail::twist_image(*a.surface, a.weights, n, b.weights, budget));
}

NormalCoordinates word_impl(const TwistWord& w, NormalCoordinates c, Budget& budget) {
    for (const TwistLetter& letter : w.letters)
        c = twist_impl(letter.curve, letter.exponent, c, budget);
    return c;
}

NormalCoordinates transversal_impl(const GenericFamily& fam, int i, Budget& budget) {
    if (i < 1 || i > fam.r())
        throw InvalidCoordinates("transversal index out of range");
    const Triangulation& T = *fam.surface;
    const NormalCoordinates uni = fam.as_union();
    const detail::RegionGraph rg = detail::build_region_graph(T, uni.weights);

    // The traced components come in trace order; match the requested one
    // by its weight vector (components of a family are pairwise distinct).
    int ci = -1;
    for (int c = 0; c < static_cast<int>(rg.fam.size()); ++c) {
        std::vector<long> w(T.num_edges(), 0);
        for (const auto& p : rg.fam[c].pts) ++w[p.edge];
        if (w == fam.components[i - 1].weights) ci = c;
    }
    if (ci < 0) throw InternalError("transversal: component not found in trace");

    struct Directed {
        int from, to;
    };
    std::vector<Directed> arcs;
    for (const auto& ca : rg.crossings) {
        if (ca.comp != ci) continue;
        arcs.push_back({ca.cell_a, ca.cell_b});
        arcs.push_back({ca.cell_b, ca.cell_a});
    }
    const int n_arcs = static_cast<int>(rg.gaps.size());
    std::vector<std::vector<std::pair<int, bool>>> adj(rg.num_cells);  // (arc, front->back)
    for (int k = 0; k < n_arcs; ++k) {
        adj[rg.gaps[k].cell_front].push_back({k, true});
        adj[rg.gaps[k].cell_back].push_back({k, false});
    }

    const auto finish = [&](const std::vector<detail::GapUse>& walk)
        -> std::optional<NormalCoordinates> {
        if (walk.empty()) return std::nullopt;
        std::vector<long> w;
        try {
            w = detail::realize_cycle(rg, walk, budget);
        } catch (const InternalError&) {
            return std::nullopt;  // interleaved transits; try another walk
        }
        if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; }))
            return std::nullopt;
        NormalCoordinates c{nullptr, {}};
        try {
            c = validate(fam.surface, w);
            if (as_generic_family(c).r() != 1) return std::nullopt;
        } catch (const Error&) {
            return std::nullopt;
        }
        if (intersection_impl(c, fam.components[i - 1], budget) == 0) return std::nullopt;
        for (int j = 0; j < fam.r(); ++j) {
            const long x = intersection_impl(c, fam.components[j], budget);
            if (j == i - 1 ? (x != 1 && x != 2) : (x != 0)) return std::nullopt;
        }
        return c;
    };

    // Depth-first search over complement walks crossing the component at
    // one or two of its chords.  Each gap arc is used at most once, but a
    // cell may be entered twice: an embedded arc can pass through the same
    // region twice, and the needed transversals often do.
    std::vector<detail::GapUse> walk;
    std::vector<int> cellcnt(rg.num_cells, 0);
    std::vector<bool> used(n_arcs, false);
    std::vector<Directed> transits;
    size_t len_cap = 0;
    long nodes_left = 4000000;
    std::optional<NormalCoordinates> result;
    const std::function<void(int, size_t)> dfs = [&](int at, size_t phase) {
        if (result || --nodes_left <= 0) return;
        const bool last = phase + 1 == transits.size();
        const int goal = last ? transits[0].from : transits[phase + 1].from;
        if (at == goal) {
            if (!last) {
                const int nxt = transits[phase + 1].to;
                if (++cellcnt[nxt] <= 2) dfs(nxt, phase + 1);
                --cellcnt[nxt];
            } else if (!walk.empty()) {
                if (auto c = finish(walk)) {
                    result = c;
                    return;
                }
            }
        }
        if (walk.size() >= len_cap) return;
        for (const auto& [arc, dir] : adj[at]) {
            if (used[arc]) continue;
            const int to = dir ? rg.gaps[arc].cell_back : rg.gaps[arc].cell_front;
            if (cellcnt[to] >= 2) continue;
            used[arc] = true;
            ++cellcnt[to];
            const int e = rg.gaps[arc].edge;
            walk.push_back({e, rg.gaps[arc].gap, dir ? T.edge_back(e) : T.edge_front(e)});
            dfs(to, phase);
            walk.pop_back();
            --cellcnt[to];
            used[arc] = false;
            if (result) return;
        }
    };
    const auto run = [&](std::vector<Directed> ts) {
        transits = std::move(ts);
        std::fill(cellcnt.begin(), cellcnt.end(), 0);
        std::fill(used.begin(), used.end(), false);
        walk.clear();
        cellcnt[transits[0].to] = 1;
        dfs(transits[0].to, 0);
    };
    // Iterative deepening keeps short solutions cheap.
    for (const size_t cap : {6u, 10u, 16u, 24u}) {
        len_cap = cap;
        for (const Directed& x : arcs) {
            run({x});
            if (result) return *result;
        }
        for (size_t xi = 0; xi < arcs.size(); ++xi)
            for (size_t yi = 0; yi < arcs.size(); ++yi) {
                if (xi == yi) continue;
                run({arcs[xi], arcs[yi]});
                if (result) return *result;
            }
        if (nodes_left <= 0) break;
    }
    throw NoTransversal("no transversal curve found for the requested component");
}

NormalCoordinates disjoint_impl(const GenericFamily& fam, const NormalCoordinates& b,
                                Budget& budget) {
    if (fam.r() == 0) return b;
    require_same_surface(fam.components[0], b);
    for (int j = 0; j < fam.r(); ++j)
        if (intersection_impl(fam.components[j], b, budget) > 0) {
            std::ostringstream os;
            os << "curve meets family component " << (j + 1);
            throw NotDisjoint(os.str());
        }
    const NormalCoordinates uni = fam.as_union();
    // Pairwise disjointness makes the joint minimal position crossing-free,
    // so the union's normal coordinates are the componentwise sum.
    detail::Diagram d = detail::make_diagram(*fam.surface, uni.weights, b.weights);
    if (detail::reduce_to_minimal(d, budget) != 0)
        throw InternalError("disjoint union failed to untangle");
    std::vector<long> sum = uni.weights;
    for (size_t e = 0; e < sum.size(); ++e) sum[e] += b.weights[e];
    return validate(fam.surface, sum);
}

}  // namespace

long intersection_number(const NormalCoordinates& a, const NormalCoordinates& b,
                         long step_budget) {
    Budget budget{step_budget};
    return intersection_impl(a, b, budget);
}

NormalCoordinates dehn_twist(const NormalCoordinates& a, long n, const NormalCoordinates& b,
                             long step_budget) {
    Budget budget{step_budget};
    return twist_impl(a, n, b, budget);
}

NormalCoordinates apply_word(const TwistWord& w, const NormalCoordinates& c,
                             long step_budget) {
    Budget budget{step_budget};
    return word_impl(w, c, budget);
}

NormalCoordinates transversal_curve(const GenericFamily& fam, int i, long step_budget) {
    Budget budget{step_budget};
    return transversal_impl(fam, i, budget);
}

NormalCoordinates realize_disjoint(const GenericFamily& fam, const NormalCoordinates& b,
                                   long step_budget) {
    Budget budget{step_budget};
    return disjoint_impl(fam, b, budget);
}

}  // namespace curvex

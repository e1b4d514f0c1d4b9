#include "curvex/orbit_enum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>
#include <tuple>

#include "curvex/curve_ops.hpp"
#include "curvex/regions.hpp"

namespace curvex {
namespace {

int node_boundary(const OrbitType& ot, int v) {
    int b = static_cast<int>(ot.nodes[v].exterior_labels.size());
    for (const OrbitEdge& e : ot.edges) {
        if (e.node_a == v) ++b;
        if (e.node_b == v) ++b;
    }
    return b;
}

/// Node decoration during enumeration; exterior labels enter only by
/// count here, since the graph search does not depend on which labels a
/// node carries.  Concrete labels are distributed over finished graphs.
struct Deco {
    int g = 0, p = 0, nlab = 0;

    std::tuple<int, int, int> key() const { return {g, p, nlab}; }
};

/// Non-increasing decoration sequences exhausting the genus budget, the
/// punctures, and the label count.
void gen_decorations(int l, int genus_budget, int punctures, int nlabels,
                     std::vector<Deco>& cur,
                     const std::function<void(const std::vector<Deco>&)>& emit) {
    if (static_cast<int>(cur.size()) == l) {
        if (genus_budget == 0 && punctures == 0 && nlabels == 0) emit(cur);
        return;
    }
    for (int g = genus_budget; g >= 0; --g)
        for (int p = punctures; p >= 0; --p)
            for (int n = nlabels; n >= 0; --n) {
                const Deco d{g, p, n};
                if (!cur.empty() && cur.back().key() < d.key()) continue;
                cur.push_back(d);
                gen_decorations(l, genus_budget - g, punctures - p, nlabels - n, cur, emit);
                cur.pop_back();
            }
}

/// Duplicate filter plus consumer.  Dedupe is on the canonical integer
/// encoding packed into bytes (every entry is a small non-negative
/// count), which keeps the seen-set compact even for catalogues with
/// millions of types.
struct StringHash {
    using is_transparent = void;
    size_t operator()(std::string_view sv) const { return std::hash<std::string_view>{}(sv); }
};

/// Consumes the graphs produced by the matrix search.  Graphs arrive with
/// placeholder labels 1..nlab per node (so label counts enter the
/// canonical keys) and are deduplicated once at that level; concrete
/// labels are then distributed over each new graph up to its automorphism
/// group, which the canonical search reports as a side effect.  Distinct
/// base graphs can never yield isomorphic labeled types, so no labeled
/// level dedupe is needed.
struct Sink {
    std::unordered_set<std::string, StringHash, std::equal_to<>> seen;
    const std::function<void(const OrbitType&)>& visit;
    const std::vector<Deco>* deco = nullptr;
    int q = 0;

    void offer(OrbitType& ot) {
        // Validity holds by construction: the graph search enforces
        // connectivity, the degree floors, and the budget accounting.
        thread_local std::vector<std::vector<int>> orders;
        const std::vector<int> enc = detail::canonical_encoding_with_orders(ot, orders);
        thread_local std::string packed;
        packed.assign(enc.size(), '\0');
        for (size_t i = 0; i < enc.size(); ++i) packed[i] = static_cast<char>(enc[i]);
        if (seen.find(std::string_view{packed}) != seen.end()) return;
        seen.insert(packed);
        if (q == 0) {
            visit(ot);
            return;
        }
        const int n = static_cast<int>(ot.nodes.size());
        // Automorphisms: any best order composed with the inverse of the
        // first one.
        thread_local std::vector<std::vector<int>> autos;
        autos.clear();
        std::vector<int> inv0(n);
        for (int k = 0; k < n; ++k) inv0[orders[0][k]] = k;
        for (size_t a = 1; a < orders.size(); ++a) {
            std::vector<int> sigma(n);
            for (int v = 0; v < n; ++v) sigma[v] = orders[a][inv0[v]];
            autos.push_back(std::move(sigma));
        }
        for (OrbitNode& nd : ot.nodes) nd.exterior_labels.clear();
        std::vector<int> cap(n), assign(q, -1);
        for (int v = 0; v < n; ++v) cap[v] = (*deco)[v].nlab;
        place_labels(ot, autos, cap, assign, 0);
    }

    /// Assigns label lab+1 to a node with spare capacity; a complete
    /// assignment is emitted when it is the lexicographically smallest in
    /// its automorphism orbit.
    void place_labels(OrbitType& ot, const std::vector<std::vector<int>>& autos,
                      std::vector<int>& cap, std::vector<int>& assign, int lab) {
        const int n = static_cast<int>(ot.nodes.size());
        if (lab == q) {
            for (const std::vector<int>& sigma : autos) {
                bool smaller = false;
                for (int x = 0; x < q; ++x) {
                    const int img = sigma[assign[x]];
                    if (img != assign[x]) {
                        smaller = img < assign[x];
                        break;
                    }
                }
                if (smaller) return;
            }
            for (int x = 0; x < q; ++x) ot.nodes[assign[x]].exterior_labels.insert(x + 1);
            visit(ot);
            for (int x = 0; x < q; ++x) ot.nodes[assign[x]].exterior_labels.erase(x + 1);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (cap[v] == 0) continue;
            --cap[v];
            assign[lab] = v;
            place_labels(ot, autos, cap, assign, lab + 1);
            ++cap[v];
        }
    }
};

/// Symmetry cut: swapping node i with an identically-decorated earlier
/// node j must not make the matrix lexicographically smaller.  Every
/// cell such a swap can move lies in rows <= i, so the test is complete
/// as soon as row i is filled, which allows pruning during the search;
/// exact dedupe is still by canonical code afterwards.
bool swap_minimal_at(const std::vector<std::vector<int>>& mult, int j, int i) {
    const int l = static_cast<int>(mult.size());
    const auto tau = [&](int v) { return v == i ? j : (v == j ? i : v); };
    for (int a = 0; a <= i; ++a)
        for (int b = a; b < l; ++b) {
            const int orig = mult[a][b];
            const int ta = tau(a), tb = tau(b);
            const int swapped = mult[std::min(ta, tb)][std::max(ta, tb)];
            if (swapped < orig) return false;
            if (swapped > orig) return true;
        }
    return true;
}

void enumerate_graphs(const SurfaceSignature& sig, int r, const std::vector<Deco>& deco,
                      Sink& found) {
    const int l = static_cast<int>(deco.size());
    std::vector<int> min_deg(l);
    for (int v = 0; v < l; ++v) {
        // Each piece has Euler characteristic at most -1, so its boundary
        // count is at least 3-2g-p; connectivity needs degree >= 1.
        min_deg[v] = std::max(3 - 2 * deco[v].g - deco[v].p - deco[v].nlab, l > 1 ? 1 : 0);
        if (min_deg[v] < 0) min_deg[v] = 0;
    }
    // Total boundary is fixed at 2r+q, so every node's degree is capped
    // by its minimum plus the global slack (zero at maximal rank).
    long slack = 2L * r;
    for (int v = 0; v < l; ++v) slack -= min_deg[v];
    if (slack < 0) return;
    std::vector<int> max_deg(l);
    for (int v = 0; v < l; ++v) max_deg[v] = min_deg[v] + static_cast<int>(slack);

    std::vector<std::vector<int>> mult(l, std::vector<int>(l, 0));
    std::vector<int> deg(l, 0);
    int edges_used = 0;

    const auto need_ok = [&]() {
        long need = 0;
        for (int v = 0; v < l; ++v) need += std::max(0, min_deg[v] - deg[v]);
        return need <= 2L * (r - edges_used);
    };

    const std::function<void(int, int)> fill = [&](int i, int j) {
        if (i == l) {
            if (edges_used != r) return;
            OrbitType ot;
            ot.ambient = sig;
            for (const Deco& d : deco) {
                OrbitNode nd{d.g, d.p, {}};
                for (int x = 1; x <= d.nlab; ++x) nd.exterior_labels.insert(x);
                ot.nodes.push_back(std::move(nd));
            }
            for (int a = 0; a < l; ++a)
                for (int b = a; b < l; ++b)
                    for (int k = 0; k < mult[a][b]; ++k) ot.edges.push_back({a, b});
            found.offer(ot);
            return;
        }
        if (j == l) {
            if (deg[i] < min_deg[i]) return;
            // Rows 0..i are final, so the components of the partial graph
            // are known.  Each future edge lowers the component count by
            // at most one, and independent cycles (capped via the node
            // range by the ambient genus) only accumulate, so
            // components-1 <= r-edges_used is needed on both fronts.
            std::vector<int> root(l);
            std::iota(root.begin(), root.end(), 0);
            const std::function<int(int)> find = [&](int v) {
                while (root[v] != v) v = root[v] = root[root[v]];
                return v;
            };
            for (int a = 0; a <= i; ++a)
                for (int b = a + 1; b < l; ++b)
                    if (mult[a][b] > 0) root[find(a)] = find(b);
            int comps = 0;
            for (int v = 0; v < l; ++v)
                if (find(v) == v) ++comps;
            if (comps > r - edges_used + 1) return;
            // A component whose nodes all lie in the finished rows can no
            // longer grow; it must already be everything.
            if (comps > 1) {
                std::vector<bool> open(l, false);
                for (int v = i + 1; v < l; ++v) open[find(v)] = true;
                for (int v = 0; v <= i; ++v)
                    if (!open[find(v)]) return;
            }
            for (int p = i - 1; p >= 0 && deco[p].key() == deco[i].key(); --p)
                if (!swap_minimal_at(mult, p, i)) return;
            fill(i + 1, i + 1);
            return;
        }
        // In-flight symmetry floor: for an adjacent identically-decorated
        // pair, minimality under their transposition is decided at the
        // first cell (in comparison order) where the pair differs.  While
        // all earlier cells are tied, the current cell must not fall
        // below its partner, so values under the floor need no recursion.
        int floor_k = 0;
        if (j - 1 > i && deco[j].key() == deco[j - 1].key()) {
            bool tied = true;
            for (int a = 0; a < i && tied; ++a) tied = mult[a][j - 1] == mult[a][j];
            if (tied) floor_k = mult[i][j - 1];
        }
        if (i > 0 && deco[i].key() == deco[i - 1].key()) {
            bool tied = true;
            for (int a = 0; a < i - 1 && tied; ++a) tied = mult[a][i - 1] == mult[a][i];
            if (tied && j > i) tied = mult[i][i] == mult[i - 1][i - 1];
            for (int b = i + 1; b < j && tied; ++b) tied = mult[i][b] == mult[i - 1][b];
            if (tied) floor_k = std::max(floor_k, j == i ? mult[i - 1][i - 1] : mult[i - 1][j]);
        }
        const int limit = r - edges_used;
        for (int k = 0; k <= limit; ++k) {
            if (k > 0) {
                ++mult[i][j];
                ++edges_used;
                if (i == j)
                    deg[i] += 2;
                else {
                    ++deg[i];
                    ++deg[j];
                }
                if (deg[i] > max_deg[i] || deg[j] > max_deg[j]) break;
            }
            if (k >= floor_k && need_ok()) fill(i, j + 1);
        }
        edges_used -= mult[i][j];
        if (i == j)
            deg[i] -= 2 * mult[i][j];
        else {
            deg[i] -= mult[i][j];
            deg[j] -= mult[i][j];
        }
        mult[i][j] = 0;
    };
    fill(0, 0);
}

OrbitType torus_annulus_type() {
    OrbitType ot;
    ot.ambient = {1, 0, 0};
    ot.nodes = {{0, 0, {}}};
    ot.edges = {{0, 0}};
    return ot;
}

}  // namespace

PantalonKind pantalon_kind(const OrbitType& ot, int v) {
    const OrbitNode& nd = ot.nodes[v];
    const int b = node_boundary(ot, v);
    if (nd.genus != 0) return PantalonKind::not_pantalon;
    if (nd.punctures == 2 && b == 1) return PantalonKind::I;
    if (nd.punctures == 1 && b == 2) return PantalonKind::II;
    if (nd.punctures == 0 && b == 3) return PantalonKind::III;
    return PantalonKind::not_pantalon;
}

int max_rank(const SurfaceSignature& sig) {
    if (sig.has_empty_curve_complex()) return 0;
    if (sig.is_closed_torus()) return 1;
    return 3 * sig.genus + sig.punctures + sig.boundary - 3;
}

int count_pantalons(const SurfaceSignature& sig) {
    if (sig.has_empty_curve_complex() || sig.is_closed_torus())
        throw NoPantalonDecomposition("surface admits no pantalon decomposition");
    return 2 * sig.genus + sig.punctures + sig.boundary - 2;
}

void enumerate_orbits(const SurfaceSignature& sig, int r,
                      const std::function<void(const OrbitType&)>& visit) {
    if (r < 1 || sig.has_empty_curve_complex()) return;
    if (sig.is_closed_torus()) {
        if (r == 1) visit(torus_annulus_type());
        return;
    }
    // Every piece has Euler characteristic at most -1, which bounds the
    // node count by |chi(M)|; independent cycles of the graph are bounded
    // by the ambient genus.
    const int pieces_cap = 2 * sig.genus + sig.punctures + sig.boundary - 2;
    for (int l = std::max(1, r - sig.genus + 1); l <= std::min(r + 1, pieces_cap); ++l) {
        const int genus_budget = sig.genus - (r - l + 1);
        if (genus_budget < 0) continue;
        std::vector<Deco> cur;
        gen_decorations(l, genus_budget, sig.punctures, sig.boundary, cur,
                        [&](const std::vector<Deco>& deco) {
                            // Distinct decoration multisets can never
                            // produce the same type, so the duplicate
                            // filter is scoped per decoration.
                            Sink found{{}, visit, &deco, sig.boundary};
                            enumerate_graphs(sig, r, deco, found);
                        });
    }
}

std::vector<OrbitType> enumerate_orbits(const SurfaceSignature& sig, int r) {
    std::vector<std::pair<std::vector<int>, OrbitType>> keyed;
    enumerate_orbits(sig, r, [&](const OrbitType& ot) {
        keyed.emplace_back(canonical_encoding(ot), ot);
    });
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<OrbitType> out;
    out.reserve(keyed.size());
    for (auto& [key, ot] : keyed) out.push_back(std::move(ot));
    return out;
}

GenericFamily complete_to_pantalon_decomposition(const GenericFamily& fam, long step_budget) {
    const SurfaceSignature sig = signature_of(*fam.surface);
    if (sig.has_empty_curve_complex() || sig.is_closed_torus())
        throw NoPantalonDecomposition("surface admits no pantalon decomposition");
    const int target = 3 * sig.genus + sig.punctures + sig.boundary - 3;
    GenericFamily cur = fam;
    while (cur.r() < target) {
        detail::Budget budget{step_budget};
        const NormalCoordinates uni = cur.as_union();
        const auto rg = detail::build_region_graph(*fam.surface, uni.weights);
        bool extended = false;
        const auto try_candidates = [&](const std::vector<std::vector<long>>& cands) {
            for (const auto& w : cands) {
                try {
                    const NormalCoordinates c = validate(fam.surface, w);
                    if (as_generic_family(c).r() != 1) continue;
                    bool dup = false;
                    for (const auto& comp : cur.components)
                        if (canonical_eq(comp, c)) {
                            dup = true;
                            break;
                        }
                    if (dup) continue;
                    const GenericFamily bigger =
                        as_generic_family(realize_disjoint(cur, c, step_budget));
                    if (bigger.r() != cur.r() + 1) continue;
                    cur = bigger;
                    extended = true;
                    return;
                } catch (const StepBudgetExceeded&) {
                    throw;
                } catch (const Error&) {
                    continue;
                }
            }
        };
        try_candidates(detail::simple_gap_cycles(rg, 200, budget));
        if (!extended) try_candidates(detail::deep_gap_cycles(rg, 400, 14, budget));
        if (!extended)
            throw InternalError("pantalon completion: no extending curve found");
    }
    const OrbitType ot = orbit_type_of(cur);
    for (int v = 0; v < static_cast<int>(ot.nodes.size()); ++v)
        if (pantalon_kind(ot, v) == PantalonKind::not_pantalon)
            throw InternalError("pantalon completion produced a non-pantalon piece");
    return cur;
}

Catalogue catalogue(const SurfaceSignature& sig) {
    Catalogue cat;
    cat.signature = sig;
    cat.max_rank = max_rank(sig);
    for (int r = 1; r <= cat.max_rank; ++r) {
        std::vector<Catalogue::Entry> entries;
        for (OrbitType& ot : enumerate_orbits(sig, r))
            entries.push_back({canonicalize(ot), std::move(ot)});
        cat.total += static_cast<long>(entries.size());
        cat.per_rank.push_back(std::move(entries));
    }
    return cat;
}

}  // namespace curvex

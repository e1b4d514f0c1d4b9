#include "curvex/orbit_types.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

#include "curvex/cut.hpp"

namespace curvex {
namespace {

/// Boundary circles of a node: edge ends (self-loops count twice) plus
/// exterior labels.
int total_boundary(const OrbitType& ot, int v) {
    int deg = static_cast<int>(ot.nodes[v].exterior_labels.size());
    for (const OrbitEdge& e : ot.edges) {
        if (e.node_a == v) ++deg;
        if (e.node_b == v) ++deg;
    }
    return deg;
}

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

}  // namespace

OrbitType orbit_type_of(const GenericFamily& fam) {
    const CutResult cut = cut_along(fam.as_union());
    OrbitType ot;
    ot.ambient = signature_of(*fam.surface);
    ot.nodes.resize(cut.pieces.size());
    // side_node[c][s]: node carrying side s of cut curve c.
    std::vector<std::array<int, 2>> side_node(fam.r(), {-1, -1});
    for (size_t p = 0; p < cut.pieces.size(); ++p) {
        const SurfaceSignature sig = signature_of(cut.pieces[p]);
        ot.nodes[p].genus = sig.genus;
        ot.nodes[p].punctures = sig.punctures;
        for (const CircleProvenance& cp : cut.provenance[p]) {
            if (const auto* ext = std::get_if<ExteriorLabel>(&cp))
                ot.nodes[p].exterior_labels.insert(ext->label);
            else if (const auto* cs = std::get_if<CurveSide>(&cp))
                side_node[cs->component][cs->side] = static_cast<int>(p);
        }
    }
    for (int c = 0; c < fam.r(); ++c) {
        if (side_node[c][0] < 0 || side_node[c][1] < 0)
            throw InternalError("orbit type: missing curve side in cut provenance");
        ot.edges.push_back({side_node[c][0], side_node[c][1]});
    }
    return ot;
}

bool is_valid_orbit_type(const OrbitType& ot) {
    const int n = static_cast<int>(ot.nodes.size());
    if (n < 1) return false;
    for (const OrbitNode& v : ot.nodes) {
        if (v.genus < 0 || v.punctures < 0) return false;
        for (int lab : v.exterior_labels)
            if (lab < 1 || lab > ot.ambient.boundary) return false;
    }
    for (const OrbitEdge& e : ot.edges) {
        if (e.node_a < 0 || e.node_a >= n || e.node_b < 0 || e.node_b >= n) return false;
    }
    // Connectivity.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const OrbitEdge& e : ot.edges)
        parent[find_root(parent, e.node_a)] = find_root(parent, e.node_b);
    for (int v = 0; v < n; ++v)
        if (find_root(parent, v) != find_root(parent, 0)) return false;
    // Genus, puncture, and label accounting.
    int genus_sum = 0, punct_sum = 0;
    for (const OrbitNode& v : ot.nodes) {
        genus_sum += v.genus;
        punct_sum += v.punctures;
    }
    const int cycles = static_cast<int>(ot.edges.size()) - n + 1;
    if (genus_sum + cycles != ot.ambient.genus) return false;
    if (punct_sum != ot.ambient.punctures) return false;
    std::set<int> labels;
    for (const OrbitNode& v : ot.nodes)
        for (int lab : v.exterior_labels)
            if (!labels.insert(lab).second) return false;
    if (static_cast<int>(labels.size()) != ot.ambient.boundary) return false;
    // Genericity of the pieces.
    for (int v = 0; v < n; ++v) {
        const OrbitNode& nd = ot.nodes[v];
        const int bnd = total_boundary(ot, v);
        if (nd.genus == 0 && nd.punctures <= 1 && bnd == 1) return false;
        if (nd.genus == 0 && nd.punctures == 0 && bnd == 2) {
            // Allowed only as the annulus bounded by both sides of one
            // curve (the torus-style self-loop).
            bool single_loop = false;
            for (const OrbitEdge& e : ot.edges)
                if (e.node_a == v && e.node_b == v) single_loop = true;
            if (!(single_loop && nd.exterior_labels.empty())) return false;
        }
    }
    return true;
}

namespace {

/// Search state for the canonical node order, kept in flat buffers: this
/// runs once per enumerated graph, so it avoids per-step allocation.
struct CanonSearch {
    int n = 0;
    const int* mult = nullptr;      // n*n symmetric, diagonal = self-loops
    const int* key_flat = nullptr;  // node keys, back to back
    const int* key_off = nullptr;   // n+1 offsets into key_flat
    const int* cls = nullptr;       // key equality classes
    std::vector<int> cur, best, perm, ties_buf;
    std::vector<char> used;
    bool have_best = false;
    /// When non-null, collects every node order achieving the best
    /// encoding; the pruning never cuts a branch still tied with the
    /// best, so the collection is complete.
    std::vector<std::vector<int>>* best_perms = nullptr;

    void place(int k) {
        if (k == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
                if (best_perms) {
                    best_perms->clear();
                    best_perms->push_back(perm);
                }
            } else if (best_perms && cur == best) {
                best_perms->push_back(perm);
            }
            return;
        }
        // The minimal encoding always continues with a node whose next
        // segment (class id, multiplicities to the placed prefix,
        // self-loops) is smallest; collect the ties for that minimum.
        int* ties = ties_buf.data() + static_cast<size_t>(k) * n;
        int nt = 0;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (nt == 0) {
                ties[nt++] = v;
                continue;
            }
            const int w = ties[0];
            int c = cls[v] - cls[w];
            for (int j = 0; j < k && c == 0; ++j)
                c = mult[v * n + perm[j]] - mult[w * n + perm[j]];
            if (c == 0) c = mult[v * n + v] - mult[w * n + w];
            if (c < 0) {
                ties[0] = v;
                nt = 1;
            } else if (c == 0) {
                ties[nt++] = v;
            }
        }
        const int w = ties[0];
        const size_t len = cur.size();
        cur.insert(cur.end(), key_flat + key_off[w], key_flat + key_off[w + 1]);
        for (int j = 0; j < k; ++j) cur.push_back(mult[w * n + perm[j]]);
        cur.push_back(mult[w * n + w]);
        const bool viable =
            !have_best ||
            !std::lexicographical_compare(best.begin(),
                                          best.begin() + std::min(best.size(), cur.size()),
                                          cur.begin(), cur.end());
        if (viable) {
            for (int t = 0; t < nt; ++t) {
                const int v = ties[t];
                used[v] = 1;
                perm.push_back(v);
                place(k + 1);
                perm.pop_back();
                used[v] = 0;
            }
        }
        cur.resize(len);
    }
};

}  // namespace

static std::vector<int> detail_canonical_encoding(const OrbitType& ot,
                                           std::vector<std::vector<int>>* best_perms) {
    const int n = static_cast<int>(ot.nodes.size());
    // Scratch buffers are reused across calls: catalogue enumeration
    // canonicalizes millions of graphs back to back.
    thread_local std::vector<int> mult, degree, key_flat, key_off, order, cls;
    thread_local CanonSearch s;
    mult.assign(static_cast<size_t>(n) * n, 0);
    degree.assign(n, 0);
    for (const OrbitEdge& e : ot.edges) {
        if (e.node_a == e.node_b) {
            ++mult[e.node_a * n + e.node_a];
            degree[e.node_a] += 2;
        } else {
            ++mult[e.node_a * n + e.node_b];
            ++mult[e.node_b * n + e.node_a];
            ++degree[e.node_a];
            ++degree[e.node_b];
        }
    }
    key_flat.clear();
    key_off.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        const OrbitNode& nd = ot.nodes[v];
        key_flat.push_back(nd.genus);
        key_flat.push_back(nd.punctures);
        key_flat.push_back(static_cast<int>(nd.exterior_labels.size()));
        key_flat.insert(key_flat.end(), nd.exterior_labels.begin(), nd.exterior_labels.end());
        key_flat.push_back(degree[v] + static_cast<int>(nd.exterior_labels.size()));
        key_off[v + 1] = static_cast<int>(key_flat.size());
    }
    // Nodes with equal keys are interchangeable for ordering purposes, so
    // comparisons go through a class id (the key's rank among the sorted
    // distinct keys).
    const auto key_cmp = [&](int a, int b) {
        return std::lexicographical_compare(key_flat.begin() + key_off[a],
                                            key_flat.begin() + key_off[a + 1],
                                            key_flat.begin() + key_off[b],
                                            key_flat.begin() + key_off[b + 1]);
    };
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), key_cmp);
    cls.assign(n, 0);
    for (int i = 1; i < n; ++i)
        cls[order[i]] = cls[order[i - 1]] + (key_cmp(order[i - 1], order[i]) ? 1 : 0);

    // Lexicographically minimal flat encoding over all node orders: at
    // position k the encoding appends the node's key followed by its edge
    // multiplicities to the already placed nodes and to itself.  Two
    // candidate segments of different lengths already differ at the
    // label-count field, so picking segment-minimal nodes is exact;
    // remaining tie branches are pruned against the best known encoding.
    s.n = n;
    s.have_best = false;
    s.cur.clear();
    s.best.clear();
    s.perm.clear();
    s.best_perms = best_perms;
    s.mult = mult.data();
    s.key_flat = key_flat.data();
    s.key_off = key_off.data();
    s.cls = cls.data();
    s.cur.reserve(key_flat.size() + static_cast<size_t>(n) * (n + 1));
    s.perm.reserve(n);
    s.ties_buf.resize(static_cast<size_t>(n) * n);
    s.used.assign(n, 0);
    s.place(0);
    return s.best;
}

std::vector<int> canonical_encoding(const OrbitType& ot) {
    return detail_canonical_encoding(ot, nullptr);
}

namespace detail {
std::vector<int> canonical_encoding_with_orders(const OrbitType& ot,
                                                std::vector<std::vector<int>>& orders) {
    return detail_canonical_encoding(ot, &orders);
}
}  // namespace detail

namespace detail {

CanonicalCode render_code(const SurfaceSignature& sig, const std::vector<int>& enc) {
    std::ostringstream os;
    os << sig.genus << '.' << sig.punctures << '.' << sig.boundary << '|';
    for (size_t i = 0; i < enc.size(); ++i) {
        if (i) os << ',';
        os << enc[i];
    }
    return os.str();
}

}  // namespace detail

CanonicalCode canonicalize(const OrbitType& ot) {
    return detail::render_code(ot.ambient, canonical_encoding(ot));
}

bool same_orbit(const GenericFamily& f1, const GenericFamily& f2) {
    if (!(*f1.surface == *f2.surface))
        throw SurfaceMismatch("families live on different surfaces");
    return canonicalize(orbit_type_of(f1)) == canonicalize(orbit_type_of(f2));
}

bool is_face(const GenericFamily& f1, const GenericFamily& f2) {
    if (!(*f1.surface == *f2.surface))
        throw SurfaceMismatch("families live on different surfaces");
    const int n1 = f1.r(), n2 = f2.r();
    if (n1 > n2) return false;
    // Injective matching by isotopy class (augmenting paths).
    std::vector<std::vector<bool>> ok(n1, std::vector<bool>(n2, false));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            ok[i][j] = canonical_eq(f1.components[i], f2.components[j]);
    std::vector<int> match(n2, -1);
    const std::function<bool(int, std::vector<bool>&)> augment =
        [&](int i, std::vector<bool>& seen) {
            for (int j = 0; j < n2; ++j) {
                if (!ok[i][j] || seen[j]) continue;
                seen[j] = true;
                if (match[j] < 0 || augment(match[j], seen)) {
                    match[j] = i;
                    return true;
                }
            }
            return false;
        };
    for (int i = 0; i < n1; ++i) {
        std::vector<bool> seen(n2, false);
        if (!augment(i, seen)) return false;
    }
    return true;
}

}  // namespace curvex

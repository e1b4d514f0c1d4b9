#include "curvex/stabilizers.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "curvex/regions.hpp"

namespace curvex {
namespace {

int node_boundary(const OrbitType& ot, int v) {
    int deg = static_cast<int>(ot.nodes[v].exterior_labels.size());
    for (const OrbitEdge& e : ot.edges) {
        deg += e.node_a == v;
        deg += e.node_b == v;
    }
    return deg;
}

std::string piece_description(PantalonKind k) {
    switch (k) {
        case PantalonKind::I:
            return "infinite cyclic, half-twist generator";
        case PantalonKind::II:
            return "Z^2, boundary Dehn twists";
        case PantalonKind::III:
            return "Z^3, boundary Dehn twists";
        default:
            return "";
    }
}

/// Re-glues the cut surface along edge e: merging its endpoints (or
/// closing a handle for a self-loop) yields the orbit type of the
/// sub-family without that curve.
OrbitType unglue_edge(OrbitType ot, int e) {
    const OrbitEdge ed = ot.edges[e];
    ot.edges.erase(ot.edges.begin() + e);
    if (ed.node_a == ed.node_b) {
        ot.nodes[ed.node_a].genus += 1;
        return ot;
    }
    const int u = std::min(ed.node_a, ed.node_b);
    const int v = std::max(ed.node_a, ed.node_b);
    ot.nodes[u].genus += ot.nodes[v].genus;
    ot.nodes[u].punctures += ot.nodes[v].punctures;
    ot.nodes[u].exterior_labels.insert(ot.nodes[v].exterior_labels.begin(),
                                       ot.nodes[v].exterior_labels.end());
    ot.nodes.erase(ot.nodes.begin() + v);
    for (OrbitEdge& f : ot.edges) {
        if (f.node_a == v) f.node_a = u;
        if (f.node_b == v) f.node_b = u;
        if (f.node_a > v) --f.node_a;
        if (f.node_b > v) --f.node_b;
    }
    return ot;
}

CanonicalCode single_curve_code(const NormalCoordinates& c) {
    return canonicalize(orbit_type_of(as_generic_family(c)));
}

/// Deterministic pool of generic curves on a bare surface: region-graph
/// cycles expanded by a fixed-seed twist walk.
std::vector<NormalCoordinates> curve_pool(const SurfaceRef& t, size_t cap, long step_budget) {
    detail::Budget budget{step_budget};
    std::vector<NormalCoordinates> pool;
    const auto consider = [&](const std::vector<long>& w) {
        try {
            const NormalCoordinates nc = validate(t, w);
            if (as_generic_family(nc).r() != 1) return;
            if (nc.total_weight() > 40) return;
            for (const auto& p : pool)
                if (canonical_eq(p, nc)) return;
            pool.push_back(nc);
        } catch (const StepBudgetExceeded&) {
            throw;
        } catch (const Error&) {
        }
    };
    const auto rg = detail::build_region_graph(*t, std::vector<long>(t->num_edges(), 0));
    for (const auto& w : detail::simple_gap_cycles(rg, 40, budget)) consider(w);
    for (const auto& w : detail::deep_gap_cycles(rg, 60, 12, budget)) consider(w);
    std::mt19937 rng(5081999);
    for (int tries = 0; tries < 300 && pool.size() < cap && !pool.empty(); ++tries) {
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<long> power(1, 2);
        const NormalCoordinates a = pool[pick(rng)];
        const NormalCoordinates c = pool[pick(rng)];
        const long n = power(rng) == 1 ? 1 : -1;
        try {
            consider(dehn_twist(a, n, c, step_budget).weights);
        } catch (const StepBudgetExceeded&) {
            throw;
        } catch (const Error&) {
        }
    }
    return pool;
}

}  // namespace

StabilizerReport stabilizer_report(const OrbitType& ot) {
    StabilizerReport rep;
    std::vector<std::vector<int>> orders;
    rep.orbit_type = detail::render_code(ot.ambient, detail::canonical_encoding_with_orders(ot, orders));
    rep.graph_automorphism_count = static_cast<long>(orders.size());
    rep.r = static_cast<int>(ot.edges.size());
    rep.q = ot.ambient.boundary;
    rep.twist_lattice_rank = rep.r + rep.q;
    rep.kernel_rank = rep.r;
    for (int i = 1; i <= rep.r; ++i)
        rep.kernel_generators.push_back("t(c" + std::to_string(i) + ") t(c" +
                                        std::to_string(i) + "')^-1");
    rep.is_pantalon_decomposition = true;
    for (int v = 0; v < static_cast<int>(ot.nodes.size()); ++v) {
        PieceReport piece;
        piece.signature = {ot.nodes[v].genus, ot.nodes[v].punctures, node_boundary(ot, v)};
        piece.kind = pantalon_kind(ot, v);
        piece.mcg_description = piece_description(piece.kind);
        if (piece.kind == PantalonKind::not_pantalon) rep.is_pantalon_decomposition = false;
        rep.pieces.push_back(std::move(piece));
    }
    rep.virtually_abelian = rep.is_pantalon_decomposition;
    rep.cub_order = 1;
    for (int i = 1; i <= rep.r; ++i) rep.cub_order *= 2L * i;
    rep.exact_sequence = "1 -> Z^" + std::to_string(rep.r) +
                         " -> M(M_A,P) -> Stab([A]) -> Cub_" + std::to_string(rep.r);
    return rep;
}

LargeActionCertificate large_action_certificate(const GenericFamily& alpha,
                                                const GenericFamily& beta, int n_images,
                                                long step_budget) {
    if (!(*alpha.surface == *beta.surface))
        throw SurfaceMismatch("large action: families live on different surfaces");
    if (n_images < 1) throw InvalidCoordinates("large action: need at least one image");
    if (is_face(alpha, beta))
        throw FacePrecondition("large action requires alpha not to be a face of beta");

    // Some component of alpha is isotopic to no component of beta: were
    // every component matched, the matching would be injective and alpha
    // a face of beta.
    int ai = -1;
    for (int i = 0; i < alpha.r() && ai < 0; ++i) {
        bool matched = false;
        for (const auto& b : beta.components)
            if (canonical_eq(alpha.components[i], b)) {
                matched = true;
                break;
            }
        if (!matched) ai = i;
    }
    if (ai < 0) throw InternalError("large action: non-face family fully matched");
    const NormalCoordinates& a = alpha.components[ai];

    LargeActionCertificate cert;
    cert.alpha = alpha;
    cert.beta = beta;
    bool member = false;
    for (const auto& b : beta.components)
        if (intersection_number(a, b, step_budget) > 0) {
            cert.twist_curve = b;
            member = true;
            break;
        }
    if (!member) {
        // a is disjoint from beta but not one of its curves; a
        // transversal of a in the merged family stays off beta.
        const GenericFamily merged = as_generic_family(realize_disjoint(beta, a, step_budget));
        int idx = -1;
        for (int k = 0; k < merged.r(); ++k)
            if (canonical_eq(merged.components[k], a)) idx = k;
        if (idx < 0) throw InternalError("large action: merged family lost the moved curve");
        cert.twist_curve = transversal_curve(merged, idx + 1, step_budget);
        for (const auto& b : beta.components)
            if (intersection_number(cert.twist_curve, b, step_budget) != 0)
                throw InternalError("large action: twist curve crosses beta");
    }

    const CanonicalCode alpha_code = canonicalize(orbit_type_of(alpha));
    const NormalCoordinates au = alpha.as_union();
    for (int n = 1; n <= n_images; ++n) {
        NormalCoordinates img = dehn_twist(cert.twist_curve, n, au, step_budget);
        const GenericFamily gf = as_generic_family(img);
        if (gf.r() != alpha.r() || canonicalize(orbit_type_of(gf)) != alpha_code)
            throw InternalError("large action: image changed orbit type");
        cert.images.push_back(std::move(img));
    }
    for (size_t x = 0; x < cert.images.size(); ++x)
        for (size_t y = x + 1; y < cert.images.size(); ++y)
            if (canonical_eq(cert.images[x], cert.images[y]))
                throw InternalError("large action: twist images collide");
    return cert;
}

NoncommensurabilityCertificate noncommensurability_certificate(const GenericFamily& alpha,
                                                               const GenericFamily& beta,
                                                               int n_images,
                                                               long step_budget) {
    const bool ab = is_face(alpha, beta), ba = is_face(beta, alpha);
    if (ab && ba)
        throw EqualClasses("noncommensurability requires distinct multicurve classes");
    NoncommensurabilityCertificate cert;
    cert.bound = n_images;
    if (!ab) cert.beta_direction = large_action_certificate(alpha, beta, n_images, step_budget);
    if (!ba) cert.alpha_direction = large_action_certificate(beta, alpha, n_images, step_budget);
    return cert;
}

ChainExample self_commensurating_chain(const SurfaceSignature& sig, long step_budget) {
    if (max_rank(sig) < 2)
        throw NoChain("no rank-2 family exists on " + sig.to_string());
    bool exists = false;
    enumerate_orbits(sig, 2, [&](const OrbitType& ot) {
        if (exists) return;
        exists = canonicalize(unglue_edge(ot, 1)) != canonicalize(unglue_edge(ot, 0));
    });
    if (!exists)
        throw NoChain("every rank-2 type on " + sig.to_string() +
                      " has equal rank-1 sub-types");

    const auto t = std::make_shared<Triangulation>(build_standard_surface(sig));
    const auto pool = curve_pool(t, 48, step_budget);
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            try {
                if (canonical_eq(pool[i], pool[j])) continue;
                if (intersection_number(pool[i], pool[j], step_budget) != 0) continue;
                const GenericFamily beta = as_generic_family(
                    realize_disjoint(as_generic_family(pool[i]), pool[j], step_budget));
                if (beta.r() != 2) continue;
                CanonicalCode c0 = single_curve_code(beta.components[0]);
                CanonicalCode c1 = single_curve_code(beta.components[1]);
                if (c0 == c1) continue;
                ChainExample chain;
                chain.surface = t;
                chain.beta = beta;
                const int a = c0 <= c1 ? 0 : 1;
                chain.alpha = as_generic_family(beta.components[a]);
                chain.code_a = a == 0 ? c0 : c1;
                chain.code_b = a == 0 ? c1 : c0;
                chain.report_alpha = stabilizer_report(orbit_type_of(chain.alpha));
                chain.report_beta = stabilizer_report(orbit_type_of(chain.beta));
                chain.induced_identity = "Ind_{H_0}^G pi_0 = Ind_{H_1}^G pi_1";
                return chain;
            } catch (const StepBudgetExceeded&) {
                throw;
            } catch (const Error&) {
                continue;
            }
        }
    throw InternalError("chain realization not found on " + sig.to_string());
}

}  // namespace curvex

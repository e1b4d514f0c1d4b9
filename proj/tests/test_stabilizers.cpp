#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "curvex/stabilizers.hpp"
#include "fixtures.hpp"

using namespace curvex;
using fixtures::surf;

namespace {

long factorial_pow2(int r) {
    long v = 1;
    for (int i = 1; i <= r; ++i) v *= 2L * i;
    return v;
}

void check_report_invariants(const OrbitType& ot) {
    const StabilizerReport rep = stabilizer_report(ot);
    const int r = static_cast<int>(ot.edges.size());
    CHECK(rep.r == r);
    CHECK(rep.q == ot.ambient.boundary);
    CHECK(rep.twist_lattice_rank == r + ot.ambient.boundary);
    CHECK(rep.kernel_rank == r);
    CHECK(rep.kernel_generators.size() == static_cast<size_t>(r));
    CHECK(rep.cub_order == factorial_pow2(r));
    CHECK(rep.graph_automorphism_count >= 1);
    CHECK(rep.orbit_type == canonicalize(ot));
    CHECK(rep.pieces.size() == ot.nodes.size());

    // The pieces glue back to the ambient surface: Euler characteristic,
    // punctures, exterior boundary, and total boundary all add up.
    int chi = 0, punctures = 0, exterior = 0, boundary = 0;
    bool all_pantalons = true;
    for (const auto& piece : rep.pieces) {
        chi += 2 - 2 * piece.signature.genus - piece.signature.punctures -
               piece.signature.boundary;
        punctures += piece.signature.punctures;
        boundary += piece.signature.boundary;
        if (piece.kind == PantalonKind::not_pantalon) {
            all_pantalons = false;
            CHECK(piece.mcg_description.empty());
        } else {
            CHECK(!piece.mcg_description.empty());
        }
    }
    for (const auto& nd : ot.nodes) exterior += static_cast<int>(nd.exterior_labels.size());
    CHECK(chi == 2 - 2 * ot.ambient.genus - ot.ambient.punctures - ot.ambient.boundary);
    CHECK(punctures == ot.ambient.punctures);
    CHECK(exterior == ot.ambient.boundary);
    CHECK(boundary == 2 * r + ot.ambient.boundary);
    CHECK(rep.is_pantalon_decomposition == all_pantalons);
    CHECK(rep.virtually_abelian == all_pantalons);
}

}  // namespace

TEST_CASE("report invariants across enumerated types") {
    for (const SurfaceSignature sig : {SurfaceSignature{2, 0, 0}, {0, 5, 1}, {1, 2, 1}}) {
        for (int r = 1; r <= max_rank(sig); ++r)
            enumerate_orbits(sig, r, check_report_invariants);
    }
}

TEST_CASE("report landmarks") {
    // Maximal genus-2 types: rank 3, no boundary, virtually abelian.
    enumerate_orbits({2, 0, 0}, 3, [](const OrbitType& ot) {
        const StabilizerReport rep = stabilizer_report(ot);
        CHECK(rep.twist_lattice_rank == 3);
        CHECK(rep.kernel_rank == 3);
        CHECK(rep.cub_order == 48);
        CHECK(rep.is_pantalon_decomposition);
        CHECK(rep.virtually_abelian);
    });

    // The torus type: one annulus piece, not a pantalon decomposition.
    enumerate_orbits({1, 0, 0}, 1, [](const OrbitType& ot) {
        const StabilizerReport rep = stabilizer_report(ot);
        CHECK(rep.twist_lattice_rank == 1);
        CHECK(!rep.is_pantalon_decomposition);
        CHECK(!rep.virtually_abelian);
    });

    // Once-punctured torus: the single rank-1 type cuts to one (0,1,2)
    // piece, a pantalon of kind II.
    const auto types = enumerate_orbits({1, 1, 0}, 1);
    REQUIRE(types.size() == 1);
    const StabilizerReport rep = stabilizer_report(types[0]);
    CHECK(rep.twist_lattice_rank == 1);
    REQUIRE(rep.pieces.size() == 1);
    CHECK(rep.pieces[0].signature == SurfaceSignature{0, 1, 2});
    CHECK(rep.pieces[0].kind == PantalonKind::II);
    CHECK(rep.is_pantalon_decomposition);
    CHECK(rep.virtually_abelian);
}

TEST_CASE("graph automorphism counts") {
    // Genus-2 rank 1: the separating type has a node swap, the
    // nonseparating type a single node.
    for (const auto& ot : enumerate_orbits({2, 0, 0}, 1)) {
        const StabilizerReport rep = stabilizer_report(ot);
        if (ot.nodes.size() == 2)
            CHECK(rep.graph_automorphism_count == 2);
        else
            CHECK(rep.graph_automorphism_count == 1);
    }
}

TEST_CASE("large action on the torus") {
    const auto t = surf(1, 0, 0);
    const GenericFamily alpha = as_generic_family(validate(t, {1, 0, 1}));
    const GenericFamily beta = as_generic_family(validate(t, {1, 1, 0}));
    const LargeActionCertificate cert = large_action_certificate(alpha, beta, 5);
    REQUIRE(cert.images.size() == 5);
    // The twist curve crosses alpha, so it is the member branch.
    bool member = false;
    for (const auto& b : cert.beta.components)
        if (canonical_eq(cert.twist_curve, b)) member = true;
    CHECK(member);
    for (size_t x = 0; x < cert.images.size(); ++x)
        for (size_t y = x + 1; y < cert.images.size(); ++y)
            CHECK(!canonical_eq(cert.images[x], cert.images[y]));
    const CanonicalCode code = canonicalize(orbit_type_of(alpha));
    for (const auto& img : cert.images)
        CHECK(canonicalize(orbit_type_of(as_generic_family(img))) == code);
}

TEST_CASE("large action via a transversal curve") {
    // Two disjoint non-isotopic curves in the 4-punctured disc: neither
    // crosses the other, so the twist curve comes from a transversal.
    const auto t = surf(0, 4, 1);
    const auto pool = fixtures::generic_pool(t, 20, 20);
    int done = 0;
    for (size_t i = 0; i < pool.size() && done < 2; ++i)
        for (size_t j = 0; j < pool.size() && done < 2; ++j) {
            if (i == j || canonical_eq(pool[i], pool[j])) continue;
            if (intersection_number(pool[i], pool[j]) != 0) continue;
            const GenericFamily alpha = as_generic_family(pool[i]);
            const GenericFamily beta = as_generic_family(pool[j]);
            const LargeActionCertificate cert = large_action_certificate(alpha, beta, 10);
            ++done;
            CHECK(cert.images.size() == 10);
            for (const auto& b : beta.components) {
                CHECK(!canonical_eq(cert.twist_curve, b));
                CHECK(intersection_number(cert.twist_curve, b) == 0);
            }
            CHECK(intersection_number(cert.twist_curve, alpha.as_union()) > 0);
        }
    CHECK(done == 2);
}

TEST_CASE("large action preconditions") {
    const auto t = surf(1, 0, 0);
    const GenericFamily alpha = as_generic_family(validate(t, {1, 0, 1}));
    CHECK_THROWS_AS((void)large_action_certificate(alpha, alpha, 5), FacePrecondition);
}

TEST_CASE("noncommensurability certificates") {
    const auto t = surf(1, 0, 0);
    const GenericFamily alpha = as_generic_family(validate(t, {1, 0, 1}));
    const GenericFamily beta = as_generic_family(validate(t, {1, 1, 0}));
    const NoncommensurabilityCertificate cert =
        noncommensurability_certificate(alpha, beta, 25);
    CHECK(cert.bound == 25);
    REQUIRE(cert.beta_direction.has_value());
    REQUIRE(cert.alpha_direction.has_value());
    CHECK(cert.beta_direction->images.size() == 25);
    CHECK(cert.alpha_direction->images.size() == 25);
    CHECK_THROWS_AS((void)noncommensurability_certificate(alpha, alpha, 5), EqualClasses);
}

TEST_CASE("noncommensurability of a face is one-directional") {
    const ChainExample chain = self_commensurating_chain({2, 0, 0});
    const NoncommensurabilityCertificate cert =
        noncommensurability_certificate(chain.alpha, chain.beta, 10);
    CHECK(!cert.beta_direction.has_value());
    REQUIRE(cert.alpha_direction.has_value());
    CHECK(cert.alpha_direction->images.size() == 10);
}

TEST_CASE("self-commensurating chains") {
    for (const SurfaceSignature sig : {SurfaceSignature{2, 0, 0}, {0, 5, 1}}) {
        const ChainExample chain = self_commensurating_chain(sig);
        CHECK(chain.beta.r() == 2);
        CHECK(chain.alpha.r() == 1);
        CHECK(is_face(chain.alpha, chain.beta));
        CHECK(chain.code_a != chain.code_b);
        CHECK(chain.code_a == canonicalize(orbit_type_of(chain.alpha)));
        CHECK(!same_orbit(as_generic_family(chain.beta.components[0]),
                          as_generic_family(chain.beta.components[1])));
        CHECK(chain.report_alpha.r == 1);
        CHECK(chain.report_beta.r == 2);
        CHECK(!chain.induced_identity.empty());
    }
    CHECK_THROWS_AS((void)self_commensurating_chain({1, 0, 0}), NoChain);
    CHECK_THROWS_AS((void)self_commensurating_chain({1, 1, 0}), NoChain);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvex/orbit_types.hpp"
#include "fixtures.hpp"

using namespace curvex;
using fixtures::disjoint_families;
using fixtures::generic_pool;
using fixtures::surf;

namespace {

GenericFamily single(const NormalCoordinates& c) { return as_generic_family(c); }

TwistWord random_word(const std::vector<NormalCoordinates>& pool, std::mt19937& rng,
                      int max_len) {
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> len(1, max_len), exp(-2, 2);
    TwistWord w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
        int e = exp(rng);
        if (e == 0) e = 1;
        w.letters.push_back({pool[pick(rng)], e});
    }
    return w;
}

GenericFamily word_image(const TwistWord& w, const GenericFamily& fam) {
    NormalCoordinates uni = fam.as_union();
    return as_generic_family(apply_word(w, uni));
}

}  // namespace

TEST_CASE("torus curve gives the annulus self-loop") {
    auto t = surf(1, 0, 0);
    const OrbitType ot = orbit_type_of(single(validate(t, {1, 0, 1})));
    REQUIRE(ot.nodes.size() == 1);
    CHECK(ot.nodes[0].genus == 0);
    CHECK(ot.nodes[0].punctures == 0);
    CHECK(ot.nodes[0].exterior_labels.empty());
    REQUIRE(ot.edges.size() == 1);
    CHECK(ot.edges[0].node_a == ot.edges[0].node_b);
    CHECK(is_valid_orbit_type(ot));
}

TEST_CASE("genus-2 nonseparating and separating curves") {
    auto t = surf(2, 0, 0);
    const auto pool = fixtures::small_weight_pool(t);
    REQUIRE(pool.size() >= 2);
    const OrbitType *nonsep = nullptr, *sep = nullptr;
    std::vector<OrbitType> types;
    std::vector<NormalCoordinates> reps;
    for (const auto& c : pool) {
        types.push_back(orbit_type_of(single(c)));
        reps.push_back(c);
    }
    size_t inonsep = 0, isep = 0;
    for (size_t k = 0; k < types.size(); ++k) {
        CHECK(is_valid_orbit_type(types[k]));
        if (types[k].nodes.size() == 1 && !nonsep) {
            nonsep = &types[k];
            inonsep = k;
        }
        if (types[k].nodes.size() == 2 && !sep) {
            sep = &types[k];
            isep = k;
        }
    }
    REQUIRE(nonsep);
    REQUIRE(sep);
    // Nonseparating: one genus-1 piece with a self-loop.
    CHECK(nonsep->nodes[0].genus == 1);
    CHECK(nonsep->nodes[0].punctures == 0);
    REQUIRE(nonsep->edges.size() == 1);
    CHECK(nonsep->edges[0].node_a == nonsep->edges[0].node_b);
    // Separating: two genus-1 pieces joined by one edge.
    for (const auto& nd : sep->nodes) {
        CHECK(nd.genus == 1);
        CHECK(nd.punctures == 0);
        CHECK(nd.exterior_labels.empty());
    }
    REQUIRE(sep->edges.size() == 1);
    CHECK(sep->edges[0].node_a != sep->edges[0].node_b);

    CHECK(canonicalize(*nonsep) != canonicalize(*sep));
    CHECK_FALSE(same_orbit(single(reps[inonsep]), single(reps[isep])));
}

TEST_CASE("canonicalization is relabeling-invariant and label-rigid") {
    OrbitType a;
    a.ambient = {2, 0, 0};
    a.nodes = {{1, 0, {}}, {1, 0, {}}};
    a.edges = {{0, 1}};
    OrbitType b = a;
    std::swap(b.nodes[0], b.nodes[1]);
    b.edges = {{1, 0}};
    CHECK(canonicalize(a) == canonicalize(b));

    // Exterior labels are rigid: swapping them changes the code.
    OrbitType c;
    c.ambient = {0, 2, 2};
    c.nodes = {{0, 2, {1}}, {0, 0, {2}}};
    c.edges = {{0, 1}};
    OrbitType d = c;
    d.nodes[0].exterior_labels = {2};
    d.nodes[1].exterior_labels = {1};
    CHECK(canonicalize(c) != canonicalize(d));

    // Self-loop versus two-node edge with the same decorations.
    OrbitType e;
    e.ambient = {2, 0, 0};
    e.nodes = {{1, 0, {}}};
    e.edges = {{0, 0}};
    CHECK(canonicalize(e) != canonicalize(a));

    // A larger symmetric graph canonicalizes quickly and consistently.
    OrbitType f;
    f.ambient = {3, 4, 0};
    for (int k = 0; k < 4; ++k) f.nodes.push_back({0, 1, {}});
    f.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {0, 0}, {2, 2}, {1, 3}};
    OrbitType g = f;
    std::swap(g.nodes[1], g.nodes[3]);
    g.edges = {{2, 3}, {3, 0}, {0, 1}, {1, 2}, {2, 0}, {2, 2}, {0, 0}, {3, 1}};
    CHECK(canonicalize(f) == canonicalize(g));
}

TEST_CASE("orbit type invariant checks reject malformed graphs") {
    OrbitType good;
    good.ambient = {2, 0, 0};
    good.nodes = {{1, 0, {}}, {1, 0, {}}};
    good.edges = {{0, 1}};
    CHECK(is_valid_orbit_type(good));

    OrbitType disconnected = good;
    disconnected.edges.clear();
    CHECK_FALSE(is_valid_orbit_type(disconnected));

    OrbitType wrong_genus = good;
    wrong_genus.nodes[0].genus = 2;
    CHECK_FALSE(is_valid_orbit_type(wrong_genus));

    OrbitType disc_piece;
    disc_piece.ambient = {1, 0, 0};
    disc_piece.nodes = {{1, 0, {}}, {0, 0, {}}};
    disc_piece.edges = {{0, 1}};
    CHECK_FALSE(is_valid_orbit_type(disc_piece));

    // Annulus piece allowed only via a single self-loop edge.
    OrbitType torus_annulus;
    torus_annulus.ambient = {1, 0, 0};
    torus_annulus.nodes = {{0, 0, {}}};
    torus_annulus.edges = {{0, 0}};
    CHECK(is_valid_orbit_type(torus_annulus));
    OrbitType bad_annulus;
    bad_annulus.ambient = {1, 0, 1};
    bad_annulus.nodes = {{0, 0, {1}}, {1, 0, {}}};
    bad_annulus.edges = {{0, 1}};
    CHECK_FALSE(is_valid_orbit_type(bad_annulus));

    OrbitType bad_labels;
    bad_labels.ambient = {0, 3, 2};
    bad_labels.nodes = {{0, 3, {1, 1}}};  // set collapses; missing label 2
    bad_labels.edges = {};
    CHECK_FALSE(is_valid_orbit_type(bad_labels));
}

TEST_CASE("orbit invariance under twist words") {
    std::mt19937 rng(9218);
    for (auto sig : {SurfaceSignature{1, 1, 0}, SurfaceSignature{0, 4, 1},
                     SurfaceSignature{2, 0, 0}}) {
        auto t = std::make_shared<Triangulation>(build_standard_surface(sig));
        const auto pool = generic_pool(t, 8, 16);
        REQUIRE(pool.size() >= 2);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int sample = 0; sample < 6; ++sample) {
            const GenericFamily fam = single(pool[pick(rng)]);
            const TwistWord w = random_word(pool, rng, 3);
            CAPTURE(sample);
            CHECK(same_orbit(fam, word_image(w, fam)));
        }
    }
}

TEST_CASE("two-component families on genus 2") {
    auto t = surf(2, 0, 0);
    const auto pool = fixtures::small_weight_pool(t);
    std::set<CanonicalCode> codes;
    int built = 0;
    for (size_t x = 0; x < pool.size() && codes.size() < 2; ++x)
        for (size_t y = x + 1; y < pool.size() && codes.size() < 2; ++y) {
            if (pool[x].weights == pool[y].weights) continue;
            if (intersection_number(pool[x], pool[y]) != 0) continue;
            GenericFamily fam;
            try {
                fam = as_generic_family(realize_disjoint(as_generic_family(pool[x]), pool[y]));
            } catch (const Error&) {
                continue;
            }
            if (fam.r() != 2) continue;
            const OrbitType ot = orbit_type_of(fam);
            CHECK(is_valid_orbit_type(ot));
            CHECK(ot.edges.size() == 2);
            codes.insert(canonicalize(ot));
            ++built;
        }
    CHECK(built > 0);
    CHECK(codes.size() >= 2);
}

TEST_CASE("face relation") {
    auto t = surf(2, 0, 0);
    const auto pool = fixtures::small_weight_pool(t);
    const auto fams = disjoint_families(t, pool, 2, 6);
    REQUIRE(!fams.empty());
    const GenericFamily& two = fams[0];
    const GenericFamily one = single(two.components[0]);
    const GenericFamily other = single(two.components[1]);
    CHECK(is_face(two, two));
    CHECK(is_face(one, two));
    CHECK(is_face(other, two));
    CHECK_FALSE(is_face(two, one));
    if (!canonical_eq(one.components[0], other.components[0]))
        CHECK_FALSE(is_face(one, other));

    auto t2 = surf(1, 1, 0);
    CHECK_THROWS_AS(is_face(one, single(validate(t2, {1, 0, 1}))), SurfaceMismatch);
    CHECK_THROWS_AS(same_orbit(one, single(validate(t2, {1, 0, 1}))), SurfaceMismatch);
}

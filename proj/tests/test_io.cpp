#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "curvex/io.hpp"
#include "fixtures.hpp"

using namespace curvex;
using fixtures::surf;

TEST_CASE("builtin surface aliases") {
    CHECK(signature_of(*builtin_surface("g2")) == SurfaceSignature{2, 0, 0});
    CHECK(signature_of(*builtin_surface("t1")) == SurfaceSignature{1, 0, 0});
    CHECK(signature_of(*builtin_surface("d5b1")) == SurfaceSignature{0, 5, 1});
    CHECK(signature_of(*builtin_surface("g1m2q1")) == SurfaceSignature{1, 2, 1});
    CHECK_THROWS_AS((void)builtin_surface("x3"), DocumentError);
    CHECK_THROWS_AS((void)builtin_surface("g"), DocumentError);
    CHECK_THROWS_AS((void)builtin_surface(""), DocumentError);
    // Spheres with fewer than three punctures have no triangulation.
    CHECK_THROWS_AS((void)builtin_surface("m2"), DocumentError);
}

TEST_CASE("surface document round-trip") {
    for (const char* alias : {"g2", "t1", "d4b1", "g1m1"}) {
        const SurfaceRef t = builtin_surface(alias);
        const Json doc = surface_document(*t);
        const SurfaceRef back = parse_surface(doc);
        CHECK(*back == *t);
        CHECK(surface_document(*back) == doc);
    }
}

TEST_CASE("multicurve document round-trip") {
    const auto t = surf(1, 0, 0);
    const NormalCoordinates c = validate(t, {1, 0, 1});
    const Json doc = multicurve_document(c);
    const NormalCoordinates back = parse_multicurve(doc);
    CHECK(back.weights == c.weights);
    CHECK(multicurve_document(back) == doc);

    Json alias_doc = doc;
    alias_doc["surface"] = "t1";
    CHECK(parse_multicurve(alias_doc).weights == c.weights);

    Json bad = doc;
    bad["weights"] = {1, 1, 1};
    CHECK_THROWS_AS((void)parse_multicurve(bad), ParityViolation);
    bad = doc;
    bad["version"] = "2";
    CHECK_THROWS_AS((void)parse_multicurve(bad), DocumentError);
    bad = doc;
    bad["kind"] = "family";
    CHECK_THROWS_AS((void)parse_multicurve(bad), DocumentError);
}

TEST_CASE("family document round-trip") {
    const auto t = surf(2, 0, 0);
    const auto pool = fixtures::small_weight_pool(t, 2, 60);
    const auto fams = fixtures::disjoint_families(t, pool, 2, 3);
    REQUIRE(!fams.empty());
    for (const auto& fam : fams) {
        const Json doc = family_document(fam);
        const GenericFamily back = parse_family(doc);
        CHECK(back.r() == fam.r());
        CHECK(family_document(back) == doc);
    }

    // A multicurve document is accepted as a family.
    const GenericFamily fam = fams[0];
    const GenericFamily via_union = parse_family(multicurve_document(fam.as_union()));
    CHECK(via_union.r() == fam.r());

    // Two parallel copies of one curve are not a generic family.
    Json bad = family_document(fam);
    bad["components"] = {fam.components[0].weights, fam.components[0].weights};
    CHECK_THROWS(parse_family(bad));
}

TEST_CASE("orbit type document round-trip") {
    for (const SurfaceSignature sig : {SurfaceSignature{2, 0, 0}, {0, 5, 1}, {1, 2, 1}}) {
        for (int r = 1; r <= max_rank(sig); ++r)
            for (const auto& ot : enumerate_orbits(sig, r)) {
                const Json doc = orbit_type_document(ot);
                const OrbitType back = parse_orbit_type(doc);
                CHECK(canonicalize(back) == canonicalize(ot));
                CHECK(orbit_type_document(back) == doc);
            }
    }

    Json doc = orbit_type_document(enumerate_orbits({2, 0, 0}, 1)[0]);
    Json bad = doc;
    bad["edges"].push_back(Json::array({0, 7}));
    CHECK_THROWS_AS((void)parse_orbit_type(bad), DocumentError);
    bad = doc;
    bad["edges"] = Json::array();
    CHECK_THROWS_AS((void)parse_orbit_type(bad), DocumentError);  // invalid graph
    bad = doc;
    bad["code"] = "2.0.0|0";
    CHECK_THROWS_AS((void)parse_orbit_type(bad), DocumentError);
}

TEST_CASE("catalogue document") {
    const Json doc = catalogue_document(catalogue({2, 0, 0}));
    CHECK(doc["total"] == 6);
    CHECK(doc["max_rank"] == 3);
    REQUIRE(doc["ranks"].size() == 3);
    for (const auto& rj : doc["ranks"]) {
        CHECK(rj["count"] == 2);
        CHECK(rj["types"].size() == 2);
        for (const auto& tj : rj["types"]) (void)parse_orbit_type(tj);
    }
}

TEST_CASE("report and certificate documents") {
    const auto types = enumerate_orbits({2, 0, 0}, 3);
    const Json rep = report_document(stabilizer_report(types[0]));
    CHECK(rep["twist_lattice_rank"] == 3);
    CHECK(rep["cub_order"] == 48);
    CHECK(rep["virtually_abelian"] == true);

    const auto t = surf(1, 0, 0);
    const GenericFamily alpha = as_generic_family(validate(t, {1, 0, 1}));
    const GenericFamily beta = as_generic_family(validate(t, {1, 1, 0}));
    const Json cert = large_action_document(large_action_certificate(alpha, beta, 5));
    CHECK(cert["images"].size() == 5);
    CHECK(parse_family(cert["alpha"]).r() == 1);

    const Json pair = noncommensurability_document(noncommensurability_certificate(alpha, beta, 5));
    CHECK(pair["bound"] == 5);
    CHECK(!pair["beta_direction"].is_null());
    CHECK(!pair["alpha_direction"].is_null());

    const Json chain = chain_document(self_commensurating_chain({0, 4, 1}));
    CHECK(chain["nonconjugacy_witness"].size() == 2);
    CHECK(chain["nonconjugacy_witness"][0] != chain["nonconjugacy_witness"][1]);
    CHECK(parse_family(chain["beta"]).r() == 2);
}

TEST_CASE("load_document envelope checks") {
    std::istringstream good(R"({"kind":"multicurve","version":"1","surface":"t1","weights":[1,0,1]})");
    const Json doc = load_document(good);
    CHECK(parse_multicurve(doc).weights == std::vector<long>{1, 0, 1});

    std::istringstream broken("{not json");
    CHECK_THROWS_AS((void)load_document(broken), DocumentError);
    std::istringstream no_kind(R"({"version":"1"})");
    CHECK_THROWS_AS((void)load_document(no_kind), DocumentError);
    std::istringstream wrong_version(R"({"kind":"multicurve","version":"0"})");
    CHECK_THROWS_AS((void)load_document(wrong_version), DocumentError);

    // Canonical dump is round-trip stable.
    const std::string s = dump_document(doc);
    std::istringstream again(s);
    CHECK(dump_document(load_document(again)) == s);
}

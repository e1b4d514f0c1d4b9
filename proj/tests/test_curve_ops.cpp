#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvex/curve_ops.hpp"
#include "curvex/regions.hpp"
#include "fixtures.hpp"

using namespace curvex;
using fixtures::surf;

namespace {

// Integer 2x2 matrices acting on slopes: the independent oracle for the
// once-punctured torus, where curves correspond to primitive vectors and
// the intersection number is the absolute determinant.
struct Mat {
    long a = 1, b = 0, c = 0, d = 1;
};
struct Vec {
    long p, q;
};
Vec apply(const Mat& m, const Vec& v) { return {m.a * v.p + m.b * v.q, m.c * v.p + m.d * v.q}; }
Mat twist_a_matrix(long k) { return {1, k, 0, 1}; }
Mat twist_b_matrix(long k) { return {1, 0, -k, 1}; }

std::vector<NormalCoordinates> generic_pool(const SurfaceRef& t, size_t cap) {
    return fixtures::generic_pool(t, cap, 20);
}

}  // namespace

TEST_CASE("torus intersection numbers match the determinant oracle") {
    auto t = surf(1, 1, 0);
    const auto a = validate(t, {1, 0, 1});
    const auto b = validate(t, {1, 1, 0});
    REQUIRE(intersection_number(a, b) == 1);
    REQUIRE(intersection_number(a, a) == 0);
    REQUIRE(intersection_number(b, b) == 0);

    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coin(0, 1), len(1, 3), exp(-2, 2);
    for (int sample = 0; sample < 30; ++sample) {
        // Two random twist words; curves and slope vectors side by side.
        NormalCoordinates cur[2] = {a, a};
        Vec vec[2] = {{1, 0}, {1, 0}};
        for (int s = 0; s < 2; ++s) {
            const bool seed_a = coin(rng) == 0;
            cur[s] = seed_a ? a : b;
            vec[s] = seed_a ? Vec{1, 0} : Vec{0, 1};
            TwistWord w;
            const int n = len(rng);
            for (int k = 0; k < n; ++k) {
                int e = exp(rng);
                if (e == 0) e = 1;
                const bool use_a = coin(rng) == 0;
                w.letters.push_back({use_a ? a : b, e});
                vec[s] = apply(use_a ? twist_a_matrix(e) : twist_b_matrix(e), vec[s]);
            }
            cur[s] = apply_word(w, cur[s]);
        }
        const long det = vec[0].p * vec[1].q - vec[0].q * vec[1].p;
        CAPTURE(sample);
        CHECK(intersection_number(cur[0], cur[1]) == std::abs(det));
        CHECK(intersection_number(cur[0], a) == std::abs(vec[0].q));
        CHECK(intersection_number(cur[0], b) == std::abs(vec[0].p));
    }
}

TEST_CASE("twist basics on the torus") {
    auto t = surf(1, 1, 0);
    const auto a = validate(t, {1, 0, 1});
    const auto b = validate(t, {1, 1, 0});
    for (long n : {-2L, -1L, 0L, 1L, 3L}) CHECK(dehn_twist(a, n, a) == a);
    CHECK(dehn_twist(a, 0, b) == b);
    const auto image = dehn_twist(a, 1, b);
    CHECK(intersection_number(image, b) == 1);  // |n| I(a,b)^2
    CHECK(dehn_twist(a, -1, image) == b);
    CHECK(intersection_number(dehn_twist(a, 3, b), b) == 3);
    CHECK(intersection_number(dehn_twist(a, -3, b), b) == 3);

    // Power law through apply_word.
    TwistWord w{{{a, 2}, {a, -1}}};
    CHECK(apply_word(w, b) == dehn_twist(a, 1, b));
    CHECK(apply_word(TwistWord{}, b) == b);

    // Twisting the vertex link keeps its class.
    const auto link = validate(t, {2, 2, 2});
    CHECK(classify_component(dehn_twist(a, 2, link)) == ComponentClass::puncture_peripheral);

    CHECK_THROWS_AS(dehn_twist(link, 1, b), NonGenericTwistCurve);
    CHECK_THROWS_AS(dehn_twist(validate(t, {0, 0, 0}), 1, b), NonGenericTwistCurve);
}

TEST_CASE("Prop 4.5 identity on anchored fixtures") {
    std::mt19937 rng(604);
    for (auto sig : {SurfaceSignature{1, 1, 0}, SurfaceSignature{1, 0, 1},
                     SurfaceSignature{0, 4, 1}}) {
        auto t = std::make_shared<Triangulation>(build_standard_surface(sig));
        const auto pool = generic_pool(t, 25);
        REQUIRE(pool.size() >= 2);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<long> power(-3, 3);
        for (int sample = 0; sample < 25; ++sample) {
            const auto& a = pool[pick(rng)];
            const auto& b = pool[pick(rng)];
            const long n = power(rng);
            const long iab = intersection_number(a, b);
            CAPTURE(sample);
            CHECK(intersection_number(dehn_twist(a, n, b), b) ==
                  std::labs(n) * iab * iab);
        }
    }
}

TEST_CASE("commutation and non-commutation witnesses") {
    auto t = surf(0, 4, 1);
    const auto pool = generic_pool(t, 40);
    REQUIRE(pool.size() >= 2);
    // Find a disjoint non-isotopic pair and a crossing pair.
    const NormalCoordinates *dis1 = nullptr, *dis2 = nullptr, *cr1 = nullptr, *cr2 = nullptr;
    for (size_t x = 0; x < pool.size() && !(dis1 && cr1); ++x)
        for (size_t y = x + 1; y < pool.size(); ++y) {
            const long i = intersection_number(pool[x], pool[y]);
            if (i == 0 && !(pool[x] == pool[y]) && !dis1) {
                dis1 = &pool[x];
                dis2 = &pool[y];
            }
            if (i > 0 && !cr1) {
                cr1 = &pool[x];
                cr2 = &pool[y];
            }
        }
    REQUIRE(dis1);
    REQUIRE(cr1);
    for (const auto& c : {*dis1, *dis2, dehn_twist(*dis1, 1, *dis2)}) {
        CHECK(dehn_twist(*dis1, 1, dehn_twist(*dis2, 1, c)) ==
              dehn_twist(*dis2, 1, dehn_twist(*dis1, 1, c)));
    }
    // Some witness separates the crossing pair's twists.
    bool separated = false;
    for (const auto& c : {*cr1, *cr2, dehn_twist(*cr1, 1, *cr2)})
        if (!(dehn_twist(*cr1, 1, dehn_twist(*cr2, 1, c)) ==
              dehn_twist(*cr2, 1, dehn_twist(*cr1, 1, c))))
            separated = true;
    CHECK(separated);
}

TEST_CASE("transversal curves") {
    auto t = surf(1, 1, 0);
    const auto a = validate(t, {1, 0, 1});
    const GenericFamily fam = as_generic_family(a);
    const auto c = transversal_curve(fam, 1);
    CHECK(intersection_number(c, a) == 1);

    auto d5 = surf(0, 4, 1);
    const auto pool = generic_pool(d5, 40);
    const NormalCoordinates *d1 = nullptr, *d2 = nullptr;
    for (size_t x = 0; x < pool.size() && !d1; ++x)
        for (size_t y = x + 1; y < pool.size(); ++y)
            if (intersection_number(pool[x], pool[y]) == 0 && !(pool[x] == pool[y])) {
                d1 = &pool[x];
                d2 = &pool[y];
                break;
            }
    REQUIRE(d1);
    const auto uni = realize_disjoint(as_generic_family(*d1), *d2);
    const GenericFamily fam2 = as_generic_family(uni);
    REQUIRE(fam2.r() == 2);
    for (int i = 1; i <= 2; ++i) {
        const auto c2 = transversal_curve(fam2, i);
        const long self = intersection_number(c2, fam2.components[i - 1]);
        CHECK((self == 1 || self == 2));
        CHECK(intersection_number(c2, fam2.components[2 - i]) == 0);
    }
}

TEST_CASE("realize_disjoint errors and trivial cases") {
    auto t = surf(1, 1, 0);
    const auto a = validate(t, {1, 0, 1});
    const auto b = validate(t, {1, 1, 0});
    CHECK(realize_disjoint(GenericFamily{t, {}}, b) == b);
    CHECK_THROWS_AS(realize_disjoint(as_generic_family(a), b), NotDisjoint);
}

TEST_CASE("step budget") {
    auto t = surf(1, 1, 0);
    const auto a = validate(t, {1, 0, 1});
    const auto b = validate(t, {1, 1, 0});
    const auto c1 = dehn_twist(a, 3, b);
    const auto c2 = dehn_twist(b, 3, a);
    CHECK_THROWS_AS(dehn_twist(c2, 2, c1, 1), StepBudgetExceeded);
    CHECK_NOTHROW(dehn_twist(c2, 2, c1, 100000));
}

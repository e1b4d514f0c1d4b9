#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <functional>
#include <random>
#include <vector>

#include "curvex/curve_ops.hpp"
#include "curvex/regions.hpp"

namespace fixtures {

inline curvex::SurfaceRef surf(int g, int m, int q) {
    return std::make_shared<curvex::Triangulation>(curvex::build_standard_surface({g, m, q}));
}

/// Pool of single generic curves: essential cycles of the bare surface's
/// region graph, expanded by small random twist words.
inline std::vector<curvex::NormalCoordinates> generic_pool(const curvex::SurfaceRef& t,
                                                           size_t cap, long max_weight = 40,
                                                           unsigned seed = 417) {
    using namespace curvex;
    std::vector<NormalCoordinates> pool;
    const auto consider = [&](const std::vector<long>& w) {
        try {
            const NormalCoordinates nc = validate(t, w);
            if (as_generic_family(nc).r() != 1) return;
            if (nc.total_weight() > max_weight) return;
            for (const auto& p : pool)
                if (p.weights == w) return;
            pool.push_back(nc);
        } catch (const Error&) {
        }
    };
    curvex::detail::Budget budget;
    const auto rg = curvex::detail::build_region_graph(*t, std::vector<long>(t->num_edges(), 0));
    for (const auto& w : curvex::detail::simple_gap_cycles(rg, 30, budget)) consider(w);
    std::mt19937 rng(seed);
    for (int tries = 0; tries < 400 && pool.size() < cap && !pool.empty(); ++tries) {
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<long> power(-2, 2);
        const NormalCoordinates a = pool[pick(rng)];
        const NormalCoordinates c = pool[pick(rng)];
        long n = power(rng);
        if (n == 0) n = 1;
        consider(dehn_twist(a, n, c).weights);
    }
    return pool;
}

/// All single generic curves with entries below `max_entry`, by
/// exhaustive sweep; only usable on surfaces with few edges.
inline std::vector<curvex::NormalCoordinates> small_weight_pool(const curvex::SurfaceRef& t,
                                                                long max_entry = 3,
                                                                size_t cap = 1000) {
    using namespace curvex;
    std::vector<NormalCoordinates> pool;
    const int E = t->num_edges();
    std::vector<long> w(E, 0);
    long total = 1;
    for (int e = 0; e < E; ++e) total *= max_entry + 1;
    for (long code = 1; code < total && pool.size() < cap; ++code) {
        long x = code;
        for (int e = 0; e < E; ++e) {
            w[e] = x % (max_entry + 1);
            x /= max_entry + 1;
        }
        try {
            const NormalCoordinates nc = validate(t, w);
            if (as_generic_family(nc).r() == 1) pool.push_back(nc);
        } catch (const Error&) {
        }
    }
    return pool;
}

/// Generic families of a given size assembled from pairwise disjoint,
/// non-isotopic pool curves.
inline std::vector<curvex::GenericFamily> disjoint_families(
    const curvex::SurfaceRef& t, const std::vector<curvex::NormalCoordinates>& pool, int size,
    size_t max_count) {
    using namespace curvex;
    std::vector<GenericFamily> out;
    std::vector<size_t> chosen;
    const std::function<void(size_t)> grow = [&](size_t next) {
        if (out.size() >= max_count) return;
        if (static_cast<int>(chosen.size()) == size) {
            try {
                NormalCoordinates uni = pool[chosen[0]];
                GenericFamily fam = as_generic_family(uni);
                for (size_t k = 1; k < chosen.size(); ++k) {
                    uni = realize_disjoint(fam, pool[chosen[k]]);
                    fam = as_generic_family(uni);
                }
                if (fam.r() == size) out.push_back(fam);
            } catch (const Error&) {
            }
            return;
        }
        for (size_t j = next; j < pool.size() && out.size() < max_count; ++j) {
            bool fits = true;
            for (size_t k : chosen) {
                if (pool[k].weights == pool[j].weights ||
                    intersection_number(pool[k], pool[j]) != 0) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            chosen.push_back(j);
            grow(j + 1);
            chosen.pop_back();
        }
    };
    (void)t;
    grow(0);
    return out;
}

}  // namespace fixtures

#endif

#ifndef CURVEX_ORBIT_ENUM_HPP
#define CURVEX_ORBIT_ENUM_HPP

#include <functional>
#include <vector>

#include "curvex/orbit_types.hpp"

namespace curvex {

/// Pantalon classification of a cut piece by (genus, punctures, boundary
/// circles): I = (0,2,1), II = (0,1,2), III = (0,0,3).
enum class PantalonKind {
    I,
    II,
    III,
    not_pantalon,
};

/// Kind of the piece behind node v of the orbit type (self-loops
/// contribute two boundary circles).
PantalonKind pantalon_kind(const OrbitType& ot, int v);

/// Largest r with a nonempty set of generic r-families: 0 when the curve
/// complex is empty, 1 on the closed torus, otherwise 3g+m+q-3.
int max_rank(const SurfaceSignature& sig);

/// Number of pieces of any pantalon decomposition: 2g+m+q-2.  Throws
/// NoPantalonDecomposition when none exists (empty complex or torus).
int count_pantalons(const SurfaceSignature& sig);

/// All orbit types with the given ambient signature and exactly r curves,
/// duplicate-free and sorted by canonical code.
std::vector<OrbitType> enumerate_orbits(const SurfaceSignature& sig, int r);

/// Streaming variant: calls visit once per distinct orbit type, in no
/// particular order, without materializing the whole list.
void enumerate_orbits(const SurfaceSignature& sig, int r,
                      const std::function<void(const OrbitType&)>& visit);

/// Extends fam to a maximal generic family cutting the surface into
/// pantalons; the input is a face of the result.
GenericFamily complete_to_pantalon_decomposition(const GenericFamily& fam,
                                                 long step_budget = -1);

struct Catalogue {
    struct Entry {
        CanonicalCode code;
        OrbitType rep;
    };
    SurfaceSignature signature;
    /// per_rank[k] lists the orbit types of rank k+1.
    std::vector<std::vector<Entry>> per_rank;
    int max_rank = 0;
    long total = 0;
};

/// Full enumeration over r = 1..max_rank.
Catalogue catalogue(const SurfaceSignature& sig);

}  // namespace curvex

#endif

#ifndef CURVEX_CURVE_OPS_HPP
#define CURVEX_CURVE_OPS_HPP

#include <vector>

#include "curvex/multicurve.hpp"

namespace curvex {

/// One twist generator: the curve and a non-zero exponent.
struct TwistLetter {
    NormalCoordinates curve;
    long exponent;
};

/// A word in Dehn twists, applied left to right.
struct TwistWord {
    std::vector<TwistLetter> letters;
};

/// Geometric intersection number of two multicurves (sum over component
/// pairs).  Symmetric.  A negative step budget means unlimited.
long intersection_number(const NormalCoordinates& a, const NormalCoordinates& b,
                         long step_budget = -1);

/// Image of b under the n-th power of the Dehn twist along the single
/// generic curve a.
NormalCoordinates dehn_twist(const NormalCoordinates& a, long n, const NormalCoordinates& b,
                             long step_budget = -1);

/// Left-to-right composition of the word's twist letters applied to c.
NormalCoordinates apply_word(const TwistWord& w, const NormalCoordinates& c,
                             long step_budget = -1);

/// A generic curve meeting component i (1-based) of the family in one or
/// two points and disjoint from every other component.
NormalCoordinates transversal_curve(const GenericFamily& fam, int i, long step_budget = -1);

/// Union of the family with a copy of b realized disjointly from it;
/// requires intersection_number(b, a_i) = 0 for every component.
NormalCoordinates realize_disjoint(const GenericFamily& fam, const NormalCoordinates& b,
                                   long step_budget = -1);

}  // namespace curvex

#endif

#ifndef CURVEX_STABILIZERS_HPP
#define CURVEX_STABILIZERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "curvex/curve_ops.hpp"
#include "curvex/orbit_enum.hpp"

namespace curvex {

/// One cut piece of a stabilizer report: its signature, its pantalon
/// kind, and a description of its pure mapping class group when the
/// piece is a pantalon (empty otherwise).
struct PieceReport {
    SurfaceSignature signature;
    PantalonKind kind = PantalonKind::not_pantalon;
    std::string mcg_description;
};

/// Structure report for the stabilizer of an orbit type of rank r on a
/// surface with q boundary circles.  The twist lattice is the free
/// abelian group generated by the Dehn twists along the family and the
/// boundary; the kernel is the rank-r lattice of twist differences
/// tau(c_i) tau(c_i')^{-1} acting trivially on the cut surface.
struct StabilizerReport {
    CanonicalCode orbit_type;
    int r = 0;
    int q = 0;
    int twist_lattice_rank = 0;  // r + q
    int kernel_rank = 0;         // r
    std::vector<std::string> kernel_generators;
    std::vector<PieceReport> pieces;
    long cub_order = 0;  // 2^r * r!, the signed permutation group of the curves
    long graph_automorphism_count = 0;  // decorated-graph automorphisms, labels fixed
    bool is_pantalon_decomposition = false;
    bool virtually_abelian = false;  // asserted only for pantalon decompositions
    std::string exact_sequence;
};

StabilizerReport stabilizer_report(const OrbitType& ot);

/// Witness that the Stab([beta])-orbit of [alpha] is infinite: a twist
/// curve stabilizing [beta] whose twist powers move alpha through N
/// pairwise distinct classes of the same orbit type.
struct LargeActionCertificate {
    GenericFamily alpha;
    GenericFamily beta;
    NormalCoordinates twist_curve;
    std::vector<NormalCoordinates> images;  // unions of tau^n(alpha), n = 1..N
};

/// Requires that alpha is not a face of beta (FacePrecondition
/// otherwise); the certificate is verified before being returned.
LargeActionCertificate large_action_certificate(const GenericFamily& alpha,
                                                const GenericFamily& beta, int n_images,
                                                long step_budget = -1);

/// Certificates bounding the index of Stab([alpha]) ∩ Stab([beta]) in
/// each stabilizer: a large action of Stab([beta]) on alpha gives at
/// least N distinct cosets in Stab([beta]), and symmetrically.  When one
/// family is a face of the other only the opposite direction applies.
struct NoncommensurabilityCertificate {
    /// Bounds [Stab(beta) : Stab(alpha) ∩ Stab(beta)] >= N.
    std::optional<LargeActionCertificate> beta_direction;
    /// Bounds [Stab(alpha) : Stab(alpha) ∩ Stab(beta)] >= N.
    std::optional<LargeActionCertificate> alpha_direction;
    int bound = 0;
};

/// Throws EqualClasses when alpha and beta are the same multicurve
/// class.
NoncommensurabilityCertificate noncommensurability_certificate(const GenericFamily& alpha,
                                                               const GenericFamily& beta,
                                                               int n_images,
                                                               long step_budget = -1);

/// A nested stabilizer pair H_0 = Stab([{a, b}]) inside H_1 = Stab([{a}])
/// whose curves have different orbit types, so the corresponding
/// sub-stabilizers are not conjugate.
struct ChainExample {
    SurfaceRef surface;
    GenericFamily beta;   // {a, b}
    GenericFamily alpha;  // {a}
    StabilizerReport report_alpha;
    StabilizerReport report_beta;
    CanonicalCode code_a;  // nonconjugacy witness: code_a != code_b
    CanonicalCode code_b;
    std::string induced_identity;
};

/// Searches the rank-2 enumeration for a type whose two curves have
/// distinct rank-1 sub-types and realizes it on the standard surface of
/// the signature.  Throws NoChain when no such type exists.
ChainExample self_commensurating_chain(const SurfaceSignature& sig, long step_budget = -1);

}  // namespace curvex

#endif

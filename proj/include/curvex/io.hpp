#ifndef CURVEX_IO_HPP
#define CURVEX_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "curvex/stabilizers.hpp"

namespace curvex {

using Json = nlohmann::json;

/// All documents are JSON objects with "kind" and "version" fields.
/// Parsing validates structure and domain invariants and throws
/// DocumentError (or the specific domain error) on failure; emitted
/// documents are canonical and re-parse to equal values.

/// Surface with the given alias: "g2" (closed genus 2), "t1" (torus),
/// "d5b1" (5-punctured disc), or any letter-number string over
/// g/t (genus), m/d (punctures), q/b (boundary), e.g. "g1m2q1".
SurfaceRef builtin_surface(const std::string& alias);

Json surface_document(const Triangulation& t);
/// Accepts an alias string or a surface document.
SurfaceRef parse_surface(const Json& j);

Json multicurve_document(const NormalCoordinates& c);
NormalCoordinates parse_multicurve(const Json& j);

Json family_document(const GenericFamily& f);
/// Accepts a family document or a multicurve document (whose components
/// then form the family).
GenericFamily parse_family(const Json& j);

Json orbit_type_document(const OrbitType& ot);
OrbitType parse_orbit_type(const Json& j);

Json catalogue_document(const Catalogue& cat);
Json report_document(const StabilizerReport& rep);
Json large_action_document(const LargeActionCertificate& cert);
Json noncommensurability_document(const NoncommensurabilityCertificate& cert);
Json chain_document(const ChainExample& chain);

/// Reads one JSON document from the stream and checks the envelope.
Json load_document(std::istream& in);

/// Canonical serialization (sorted keys, two-space indent, newline).
std::string dump_document(const Json& j);

}  // namespace curvex

#endif

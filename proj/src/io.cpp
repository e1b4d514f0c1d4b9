#include "curvex/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>

namespace curvex {
namespace {

constexpr const char* kVersion = "1";

void require(bool cond, const std::string& what) {
    if (!cond) throw DocumentError(what);
}

Json envelope(const char* kind) {
    Json j = Json::object();
    j["kind"] = kind;
    j["version"] = kVersion;
    return j;
}

void check_envelope(const Json& j, const char* kind) {
    require(j.is_object(), "document is not a JSON object");
    require(j.contains("kind") && j["kind"].is_string(), "document lacks a kind");
    require(j["kind"] == kind,
            std::string("expected a ") + kind + " document, got " +
                j["kind"].get<std::string>());
    require(j.contains("version") && j["version"] == kVersion,
            "unsupported document version");
}

std::vector<long> long_array(const Json& j, const std::string& what) {
    require(j.is_array(), what + " is not an array");
    std::vector<long> out;
    for (const auto& x : j) {
        require(x.is_number_integer(), what + " has a non-integer entry");
        out.push_back(x.get<long>());
    }
    return out;
}

Json signature_json(const SurfaceSignature& sig) {
    return Json{{"genus", sig.genus}, {"punctures", sig.punctures}, {"boundary", sig.boundary}};
}

SurfaceSignature parse_signature(const Json& j) {
    require(j.is_object() && j.contains("genus") && j.contains("punctures") &&
                j.contains("boundary"),
            "malformed signature");
    SurfaceSignature sig{j["genus"].get<int>(), j["punctures"].get<int>(),
                         j["boundary"].get<int>()};
    require(sig.genus >= 0 && sig.punctures >= 0 && sig.boundary >= 0,
            "negative signature entry");
    return sig;
}

}  // namespace

SurfaceRef builtin_surface(const std::string& alias) {
    SurfaceSignature sig{0, 0, 0};
    size_t i = 0;
    require(!alias.empty(), "empty surface alias");
    while (i < alias.size()) {
        const char c = static_cast<char>(std::tolower(alias[i]));
        ++i;
        size_t len = 0;
        int value = 0;
        while (i + len < alias.size() && std::isdigit(alias[i + len])) {
            value = value * 10 + (alias[i + len] - '0');
            ++len;
        }
        require(len > 0, "surface alias letter without a count: " + alias);
        i += len;
        switch (c) {
            case 'g':
            case 't':
                sig.genus = value;
                break;
            case 'm':
            case 'd':
                sig.punctures = value;
                break;
            case 'q':
            case 'b':
                sig.boundary = value;
                break;
            default:
                throw DocumentError("unknown surface alias letter in: " + alias);
        }
    }
    try {
        return std::make_shared<Triangulation>(build_standard_surface(sig));
    } catch (const UnsupportedSignature& e) {
        throw DocumentError(std::string("alias ") + alias + ": " + e.what());
    }
}

Json surface_document(const Triangulation& t) {
    Json j = envelope("surface");
    j["triangles"] = t.num_triangles();
    Json glued = Json::array();
    for (SlotId s = 0; s < t.num_slots(); ++s) glued.push_back(t.partner(s));
    j["glued"] = std::move(glued);
    Json punctures = Json::array();
    int ghost_corner = -1;
    std::vector<bool> seen(t.num_vertices(), false);
    for (int tri = 0; tri < t.num_triangles(); ++tri)
        for (int c = 0; c < 3; ++c) {
            const int v = t.vertex_at(tri, c);
            if (seen[v]) continue;
            seen[v] = true;
            if (t.vertex_kind(v) == VertexKind::puncture) punctures.push_back(tri * 3 + c);
            if (t.vertex_kind(v) == VertexKind::ghost) ghost_corner = tri * 3 + c;
        }
    j["puncture_corners"] = std::move(punctures);
    j["ghost_corner"] = ghost_corner;
    return j;
}

SurfaceRef parse_surface(const Json& j) {
    if (j.is_string()) return builtin_surface(j.get<std::string>());
    check_envelope(j, "surface");
    require(j.contains("triangles") && j["triangles"].is_number_integer(),
            "surface document lacks a triangle count");
    const int n = j["triangles"].get<int>();
    std::vector<long> glued = long_array(j.at("glued"), "glued table");
    std::vector<long> punctures = long_array(j.value("puncture_corners", Json::array()),
                                             "puncture corner list");
    const int ghost = j.value("ghost_corner", -1);
    try {
        return std::make_shared<Triangulation>(
            n, std::vector<SlotId>(glued.begin(), glued.end()),
            std::vector<int>(punctures.begin(), punctures.end()), ghost);
    } catch (const Error& e) {
        throw DocumentError(std::string("invalid surface tables: ") + e.what());
    }
}

Json multicurve_document(const NormalCoordinates& c) {
    Json j = envelope("multicurve");
    j["surface"] = surface_document(*c.surface);
    j["weights"] = c.weights;
    return j;
}

NormalCoordinates parse_multicurve(const Json& j) {
    check_envelope(j, "multicurve");
    require(j.contains("surface"), "multicurve document lacks a surface");
    const SurfaceRef t = parse_surface(j["surface"]);
    return validate(t, long_array(j.at("weights"), "weight vector"));
}

Json family_document(const GenericFamily& f) {
    Json j = envelope("family");
    j["surface"] = surface_document(*f.surface);
    Json comps = Json::array();
    for (const auto& c : f.components) comps.push_back(c.weights);
    j["components"] = std::move(comps);
    return j;
}

GenericFamily parse_family(const Json& j) {
    if (j.is_object() && j.contains("kind") && j["kind"] == "multicurve")
        return as_generic_family(parse_multicurve(j));
    check_envelope(j, "family");
    require(j.contains("surface"), "family document lacks a surface");
    const SurfaceRef t = parse_surface(j["surface"]);
    require(j.contains("components") && j["components"].is_array(),
            "family document lacks components");
    std::vector<long> sum(t->num_edges(), 0);
    std::vector<std::vector<long>> comps;
    for (const auto& cj : j["components"]) {
        comps.push_back(long_array(cj, "component weights"));
        require(comps.back().size() == sum.size(), "component weight length mismatch");
        for (size_t e = 0; e < sum.size(); ++e) sum[e] += comps.back()[e];
    }
    const GenericFamily fam = as_generic_family(validate(t, sum));
    require(fam.r() == static_cast<int>(comps.size()),
            "family components are not pairwise disjoint non-isotopic curves");
    for (const auto& w : comps) {
        const bool found = std::any_of(fam.components.begin(), fam.components.end(),
                                       [&](const NormalCoordinates& c) { return c.weights == w; });
        require(found, "family component is not in minimal position");
    }
    return fam;
}

Json orbit_type_document(const OrbitType& ot) {
    Json j = envelope("orbit_type");
    j["ambient"] = signature_json(ot.ambient);
    Json nodes = Json::array();
    for (const auto& nd : ot.nodes) {
        Json n{{"genus", nd.genus}, {"punctures", nd.punctures}};
        n["labels"] = std::vector<int>(nd.exterior_labels.begin(), nd.exterior_labels.end());
        nodes.push_back(std::move(n));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : ot.edges) edges.push_back(Json::array({e.node_a, e.node_b}));
    j["edges"] = std::move(edges);
    j["code"] = canonicalize(ot);
    return j;
}

OrbitType parse_orbit_type(const Json& j) {
    check_envelope(j, "orbit_type");
    OrbitType ot;
    ot.ambient = parse_signature(j.at("ambient"));
    require(j.contains("nodes") && j["nodes"].is_array(), "orbit type lacks nodes");
    for (const auto& nj : j["nodes"]) {
        OrbitNode nd;
        nd.genus = nj.at("genus").get<int>();
        nd.punctures = nj.at("punctures").get<int>();
        for (long l : long_array(nj.value("labels", Json::array()), "label set"))
            nd.exterior_labels.insert(static_cast<int>(l));
        ot.nodes.push_back(std::move(nd));
    }
    require(j.contains("edges") && j["edges"].is_array(), "orbit type lacks edges");
    for (const auto& ej : j["edges"]) {
        const std::vector<long> ends = long_array(ej, "edge endpoints");
        require(ends.size() == 2, "edge does not have two endpoints");
        const int n = static_cast<int>(ot.nodes.size());
        require(ends[0] >= 0 && ends[0] < n && ends[1] >= 0 && ends[1] < n,
                "edge endpoint out of range");
        ot.edges.push_back({static_cast<int>(ends[0]), static_cast<int>(ends[1])});
    }
    require(is_valid_orbit_type(ot), "orbit type violates the structural invariants");
    if (j.contains("code"))
        require(j["code"] == canonicalize(ot), "orbit type code does not match the graph");
    return ot;
}

Json catalogue_document(const Catalogue& cat) {
    Json j = envelope("catalogue");
    j["signature"] = signature_json(cat.signature);
    j["max_rank"] = cat.max_rank;
    j["total"] = cat.total;
    Json ranks = Json::array();
    for (size_t k = 0; k < cat.per_rank.size(); ++k) {
        Json rj{{"r", static_cast<int>(k) + 1},
                {"count", static_cast<long>(cat.per_rank[k].size())}};
        Json types = Json::array();
        for (const auto& entry : cat.per_rank[k]) types.push_back(orbit_type_document(entry.rep));
        rj["types"] = std::move(types);
        ranks.push_back(std::move(rj));
    }
    j["ranks"] = std::move(ranks);
    return j;
}

Json report_document(const StabilizerReport& rep) {
    Json j = envelope("report");
    j["orbit_type"] = rep.orbit_type;
    j["r"] = rep.r;
    j["q"] = rep.q;
    j["twist_lattice_rank"] = rep.twist_lattice_rank;
    j["kernel_rank"] = rep.kernel_rank;
    j["kernel_generators"] = rep.kernel_generators;
    Json pieces = Json::array();
    for (const auto& p : rep.pieces) {
        Json pj{{"signature", signature_json(p.signature)},
                {"mcg", p.mcg_description}};
        switch (p.kind) {
            case PantalonKind::I:
                pj["pantalon"] = "I";
                break;
            case PantalonKind::II:
                pj["pantalon"] = "II";
                break;
            case PantalonKind::III:
                pj["pantalon"] = "III";
                break;
            default:
                pj["pantalon"] = nullptr;
        }
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    j["cub_order"] = rep.cub_order;
    j["graph_automorphism_count"] = rep.graph_automorphism_count;
    j["is_pantalon_decomposition"] = rep.is_pantalon_decomposition;
    j["virtually_abelian"] = rep.virtually_abelian;
    j["exact_sequence"] = rep.exact_sequence;
    return j;
}

Json large_action_document(const LargeActionCertificate& cert) {
    Json j = envelope("certificate");
    j["certifies"] = "large_action";
    j["alpha"] = family_document(cert.alpha);
    j["beta"] = family_document(cert.beta);
    j["twist_curve"] = cert.twist_curve.weights;
    Json images = Json::array();
    for (const auto& img : cert.images) images.push_back(img.weights);
    j["images"] = std::move(images);
    return j;
}

Json noncommensurability_document(const NoncommensurabilityCertificate& cert) {
    Json j = envelope("certificate");
    j["certifies"] = "noncommensurability";
    j["bound"] = cert.bound;
    j["beta_direction"] =
        cert.beta_direction ? large_action_document(*cert.beta_direction) : Json(nullptr);
    j["alpha_direction"] =
        cert.alpha_direction ? large_action_document(*cert.alpha_direction) : Json(nullptr);
    return j;
}

Json chain_document(const ChainExample& chain) {
    Json j = envelope("chain");
    j["surface"] = surface_document(*chain.surface);
    j["beta"] = family_document(chain.beta);
    j["alpha"] = family_document(chain.alpha);
    j["report_alpha"] = report_document(chain.report_alpha);
    j["report_beta"] = report_document(chain.report_beta);
    j["nonconjugacy_witness"] = Json::array({chain.code_a, chain.code_b});
    j["induced_identity"] = chain.induced_identity;
    return j;
}

Json load_document(std::istream& in) {
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw DocumentError(std::string("JSON parse failure: ") + e.what());
    }
    require(j.is_object(), "document is not a JSON object");
    require(j.contains("kind"), "document lacks a kind");
    require(j.contains("version") && j["version"] == kVersion,
            "unsupported document version");
    return j;
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace curvex

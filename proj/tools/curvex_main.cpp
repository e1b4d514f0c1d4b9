#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curvex/io.hpp"

namespace {

using namespace curvex;

Json read_document(const std::string& path) {
    if (path == "-") return load_document(std::cin);
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open " + path);
    return load_document(in);
}

void emit(const Json& j) { std::cout << dump_document(j); }

GenericFamily family_from(const std::string& path) { return parse_family(read_document(path)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isotopy classes of multicurves on compact oriented surfaces"};
    app.require_subcommand(1);
    long step_budget = -1;
    app.add_option("--step-budget", step_budget,
                   "cap on tightening steps per operation (-1 = unlimited)");

    int g = 0, m = 0, q = 0, rank = -1, n_images = 25;
    long power = 1;
    std::string file1, file2, along;

    CLI::App* orbits = app.add_subcommand("orbits", "enumerate orbit types");
    orbits->add_option("g", g, "genus")->required()->check(CLI::NonNegativeNumber);
    orbits->add_option("m", m, "punctures")->required()->check(CLI::NonNegativeNumber);
    orbits->add_option("q", q, "boundary circles")->required()->check(CLI::NonNegativeNumber);
    orbits->add_option("r", rank, "restrict to one rank")->check(CLI::PositiveNumber);

    CLI::App* classify = app.add_subcommand("classify", "orbit type of a family");
    classify->add_option("file", file1, "family or multicurve document")->required();

    CLI::App* equiv = app.add_subcommand("equiv", "decide orbit equivalence");
    equiv->add_option("file1", file1)->required();
    equiv->add_option("file2", file2)->required();

    CLI::App* intersect = app.add_subcommand("intersect", "geometric intersection number");
    intersect->add_option("file1", file1)->required();
    intersect->add_option("file2", file2)->required();

    CLI::App* twist = app.add_subcommand("twist", "apply a Dehn twist power");
    twist->add_option("--along", along, "twist curve document")->required();
    twist->add_option("--power", power, "twist exponent");
    twist->add_option("file", file1, "multicurve document")->required();

    CLI::App* complete = app.add_subcommand("complete", "extend to a pantalon decomposition");
    complete->add_option("file", file1, "family document")->required();

    CLI::App* stabilizer = app.add_subcommand("stabilizer", "stabilizer structure report");
    stabilizer->add_option("file", file1, "orbit type or family document")->required();

    CLI::App* large = app.add_subcommand("large-action", "large action certificate");
    large->add_option("file1", file1, "moved family (alpha)")->required();
    large->add_option("file2", file2, "stabilized family (beta)")->required();
    large->add_option("-n", n_images, "number of images")->check(CLI::PositiveNumber);

    CLI::App* chain = app.add_subcommand("chain", "nested stabilizer chain example");
    chain->add_option("g", g, "genus")->required()->check(CLI::NonNegativeNumber);
    chain->add_option("m", m, "punctures")->required()->check(CLI::NonNegativeNumber);
    chain->add_option("q", q, "boundary circles")->required()->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (orbits->parsed()) {
            const SurfaceSignature sig{g, m, q};
            if (rank > 0) {
                Catalogue slice;
                slice.signature = sig;
                slice.max_rank = max_rank(sig);
                std::vector<Catalogue::Entry> entries;
                for (OrbitType& ot : enumerate_orbits(sig, rank))
                    entries.push_back({canonicalize(ot), std::move(ot)});
                slice.total = static_cast<long>(entries.size());
                for (int r = 1; r < rank; ++r) slice.per_rank.emplace_back();
                slice.per_rank.push_back(std::move(entries));
                emit(catalogue_document(slice));
            } else {
                emit(catalogue_document(catalogue(sig)));
            }
        } else if (classify->parsed()) {
            emit(orbit_type_document(orbit_type_of(family_from(file1))));
        } else if (equiv->parsed()) {
            Json j{{"kind", "verdict"}, {"version", "1"}};
            j["same_orbit"] = same_orbit(family_from(file1), family_from(file2));
            emit(j);
        } else if (intersect->parsed()) {
            const NormalCoordinates a = family_from(file1).as_union();
            const NormalCoordinates b = family_from(file2).as_union();
            std::cout << intersection_number(a, b, step_budget) << "\n";
        } else if (twist->parsed()) {
            const NormalCoordinates a = parse_multicurve(read_document(along));
            const NormalCoordinates b = parse_multicurve(read_document(file1));
            emit(multicurve_document(power == 0 ? b : dehn_twist(a, power, b, step_budget)));
        } else if (complete->parsed()) {
            emit(family_document(
                complete_to_pantalon_decomposition(family_from(file1), step_budget)));
        } else if (stabilizer->parsed()) {
            const Json doc = read_document(file1);
            const OrbitType ot = doc.contains("kind") && doc["kind"] == "orbit_type"
                                     ? parse_orbit_type(doc)
                                     : orbit_type_of(parse_family(doc));
            emit(report_document(stabilizer_report(ot)));
        } else if (large->parsed()) {
            emit(large_action_document(large_action_certificate(
                family_from(file1), family_from(file2), n_images, step_budget)));
        } else if (chain->parsed()) {
            emit(chain_document(self_commensurating_chain({g, m, q}, step_budget)));
        }
    } catch (const Error& e) {
        Json err{{"kind", "error"}, {"version", "1"}};
        err["error"] = e.code();
        err["message"] = e.what();
        std::cerr << dump_document(err);
        return 1;
    }
    return 0;
}

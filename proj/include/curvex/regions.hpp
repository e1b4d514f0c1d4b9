#ifndef CURVEX_REGIONS_HPP
#define CURVEX_REGIONS_HPP

#include <vector>

#include "curvex/diagram.hpp"

namespace curvex::detail {

/// Adjacency structure of the complement of a traced multicurve.  Cells
/// are the pieces into which the curve chords cut each triangle; gap
/// arcs join cells across the strand-free subintervals of interior
/// edges; crossing arcs join the two cells flanking a curve chord.
struct RegionGraph {
    const Triangulation* T = nullptr;
    std::vector<DComp> fam;  // traced family, standard parameters
    int num_cells = 0;

    struct GapArc {
        int cell_front, cell_back;  // cells seen from the edge's two slots
        int edge;
        long gap;  // 0..weight, counted along the front slot direction
    };
    struct CrossArc {
        int cell_a, cell_b;
        int comp, chord;
    };
    std::vector<GapArc> gaps;
    std::vector<CrossArc> crossings;
};

RegionGraph build_region_graph(const Triangulation& T, const std::vector<long>& weights);

/// One edge traversal of a candidate curve: it crosses `edge` inside gap
/// interval `gap` and continues into the triangle of slot `entered`.
struct GapUse {
    int edge;
    long gap;
    SlotId entered;
};

/// Realizes the cyclic gap sequence as a curve diagram, tightens it, and
/// returns its edge weights (all zero if the curve was inessential in
/// the triangulated sense and vanished).
std::vector<long> realize_cycle(const RegionGraph& rg, const std::vector<GapUse>& walk,
                                Budget& budget);

/// Weight vectors of curves obtained from simple cycles of the gap arcs
/// (hence disjoint from the family); duplicates and vanished curves are
/// dropped.  Deterministic order.
std::vector<std::vector<long>> simple_gap_cycles(const RegionGraph& rg, size_t max_count,
                                                 Budget& budget);

/// Like simple_gap_cycles, but enumerates cycles of length at most
/// max_len using each gap arc up to twice, reaching curves (such as
/// boundaries of neighborhoods of two circles joined by an arc) that run
/// through a gap with two parallel strands.
std::vector<std::vector<long>> deep_gap_cycles(const RegionGraph& rg, size_t max_count,
                                               int max_len, Budget& budget);

}  // namespace curvex::detail

#endif

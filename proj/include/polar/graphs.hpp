#pragma once

#include <utility>
#include <vector>

#include "polar/ideal.hpp"

namespace polar {

/// Simple undirected graph on copy-indexed vertices.
struct SimpleGraph {
    std::vector<VarRef> vertices;
    std::vector<std::pair<int, int>> edges;  // vertex index pairs, i < j

    int indexOf(VarRef v) const;  // -1 when absent
    std::vector<int> neighbors(int v) const;

    bool operator==(const SimpleGraph&) const = default;
};

SimpleGraph complete_graph(int n);

/// Generators x_u x_v per edge; n = max base among the vertices.
MonomialIdeal edge_ideal(const SimpleGraph& graph);

/// All unordered bipartitions (A, B) of N(i) such that every a-b pair is
/// an edge; exactly the splits of i that stay polarizations.
std::vector<std::pair<std::vector<int>, std::vector<int>>> valid_splits(const SimpleGraph& graph,
                                                                        int vertex);

/// Polarize vertex i into i (adjacent to A) and a fresh copy i' (adjacent
/// to B).  The split must come from valid_splits.
SimpleGraph split_vertex(const SimpleGraph& graph, int vertex,
                         const std::pair<std::vector<int>, std::vector<int>>& split);

}  // namespace polar

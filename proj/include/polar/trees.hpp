#pragma once

#include <set>
#include <utility>
#include <vector>

#include "polar/ideal.hpp"

namespace polar {

/// Spanning tree of K_n with edges labeled e_1..e_{n-1} by list position.
struct LabeledTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // edges[k] = e_{k+1}, endpoints in 1..n

    bool operator==(const LabeledTree&) const = default;
};

bool is_valid_tree(const LabeledTree& tree);

/// All spanning trees of K_n (2 <= n <= 8), edges canonically sorted and
/// labeled in order; deterministic enumeration.
std::vector<LabeledTree> enumerate_spanning_trees(int n);

/// Edge e_i = (v, w) splits the tree in two; the component of v is labeled
/// w^(i), the other one v^(i).  Generator m_v multiplies the labels at v.
/// A polarization of I_{n-1}, one generator per vertex.
MonomialIdeal tree_polarization(const LabeledTree& tree);

/// x_i^(p) x_j^(q) where the unique i-j path starts with label p and ends
/// with label q; equals alexander_dual(tree_polarization(tree)) verbatim.
MonomialIdeal tree_dual(const LabeledTree& tree);

struct LinearRelationGraph {
    int count = 0;                          // generators, in canonical ideal order
    std::set<std::pair<int, int>> edges;    // generator index pairs, lcm degree = degree + 1
    bool connected = false;
};

/// Linear syzygy graph of an equigenerated ideal.
LinearRelationGraph linear_relation_graph(const MonomialIdeal& ideal);

/// For a tree polarization: vertex v whose generator omits base v, per
/// generator in canonical ideal order.
std::vector<int> generator_vertices(const MonomialIdeal& ideal);

}  // namespace polar

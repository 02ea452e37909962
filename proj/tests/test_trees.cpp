#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "polar/duality.hpp"
#include "polar/hilbert.hpp"
#include "polar/partitions.hpp"
#include "polar/trees.hpp"
#include "util.hpp"

using namespace polar;
using testutil::mk;
using testutil::mkIdeal;

TEST_CASE("tree validity") {
    CHECK(is_valid_tree(LabeledTree{3, {{1, 2}, {2, 3}}}));
    CHECK_FALSE(is_valid_tree(LabeledTree{3, {{1, 2}}}));
    CHECK_FALSE(is_valid_tree(LabeledTree{3, {{1, 2}, {1, 2}}}));
    CHECK_FALSE(is_valid_tree(LabeledTree{4, {{1, 2}, {3, 4}, {1, 2}}}));
}

TEST_CASE("spanning tree counts follow Cayley's formula") {
    CHECK(enumerate_spanning_trees(3).size() == 3);
    CHECK(enumerate_spanning_trees(4).size() == 16);
    CHECK(enumerate_spanning_trees(5).size() == 125);
    CHECK_THROWS(enumerate_spanning_trees(1));
    CHECK_THROWS(enumerate_spanning_trees(9));
}

TEST_CASE("path 1-2-3: polarization by the component labeling rule") {
    LabeledTree path{3, {{1, 2}, {2, 3}}};
    CHECK(tree_polarization(path) ==
          mkIdeal(3, {mk({{2, 1, 1}, {3, 2, 1}}), mk({{1, 1, 1}, {3, 2, 1}}),
                      mk({{1, 1, 1}, {2, 2, 1}})}));
}

TEST_CASE("path 1-2-3: dual by first/last path edge labels") {
    LabeledTree path{3, {{1, 2}, {2, 3}}};
    auto dual = tree_dual(path);
    CHECK(dual == mkIdeal(3, {mk({{1, 1, 1}, {2, 1, 1}}), mk({{1, 1, 1}, {3, 2, 1}}),
                              mk({{2, 2, 1}, {3, 2, 1}})}));
    CHECK(alexander_dual(tree_polarization(path)) == dual);
}

TEST_CASE("every tree gives a polarization whose dual matches exactly") {
    for (int n = 3; n <= 5; ++n) {
        auto target = squarefree_power_ideal(n, n - 1);
        auto targetNum = hilbert_numerator(target);
        for (const auto& tree : enumerate_spanning_trees(n)) {
            auto pol = tree_polarization(tree);
            CHECK(is_polarization(pol, target, targetNum).ok);
            CHECK(alexander_dual(pol) == tree_dual(tree));
        }
    }
}

TEST_CASE("linear relation graph of a tree polarization is the tree") {
    for (const auto& tree : enumerate_spanning_trees(4)) {
        auto pol = tree_polarization(tree);
        auto graph = linear_relation_graph(pol);
        CHECK(graph.count == 4);
        CHECK(graph.connected);
        // generator k omits base vertices[k]; translate graph edges back
        auto vertices = generator_vertices(pol);
        std::set<std::pair<int, int>> expected;
        for (auto [v, w] : tree.edges)
            expected.insert({std::min(v, w), std::max(v, w)});
        std::set<std::pair<int, int>> got;
        for (auto [a, b] : graph.edges) {
            int v = vertices[static_cast<size_t>(a)], w = vertices[static_cast<size_t>(b)];
            got.insert({std::min(v, w), std::max(v, w)});
        }
        CHECK(got == expected);
    }
}

TEST_CASE("unpolarized I_{n-1} has a complete linear relation graph") {
    auto graph = linear_relation_graph(squarefree_power_ideal(4, 3));
    CHECK(graph.count == 4);
    CHECK(graph.edges.size() == 6);
}

TEST_CASE("path tree matches the box polarization for n=4") {
    LabeledTree path{4, {{1, 2}, {2, 3}, {3, 4}}};
    auto dual = tree_dual(path);
    auto box = partition_to_ideal(box_partition(4, 2));
    CHECK(canonical_form(dual) == canonical_form(box));
}

TEST_CASE("star tree matches the standard polarization for n=4") {
    LabeledTree star{4, {{1, 4}, {2, 4}, {3, 4}}};
    auto dual = tree_dual(star);
    auto standard = partition_to_ideal(single_variable_partition(4, 2, 4));
    CHECK(canonical_form(dual) == canonical_form(standard));
}

TEST_CASE("tree polarizations give maximal partition families") {
    for (const auto& tree : enumerate_spanning_trees(4)) {
        auto family = ideal_to_partition(tree_polarization(tree));
        CHECK(satisfies_criterion(family).ok);
        CHECK(is_maximal(family));
    }
}

TEST_CASE("distinct labeled trees have distinct canonical forms (n <= 4)") {
    for (int n = 3; n <= 4; ++n) {
        std::set<std::string> forms;
        for (const auto& tree : enumerate_spanning_trees(n)) {
            std::string key;
            for (const auto& g : canonical_form(tree_polarization(tree)).gens)
                key += g.str() + "|";
            forms.insert(key);
        }
        CHECK(forms.size() == enumerate_spanning_trees(n).size());
    }
}

TEST_CASE("linear_relation_graph rejects non-equigenerated input") {
    CHECK_THROWS(linear_relation_graph(mkIdeal(2, {mk({{1, 1, 1}}), mk({{2, 1, 2}})})));
}

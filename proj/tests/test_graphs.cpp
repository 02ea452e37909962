#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polar/graphs.hpp"
#include "polar/hilbert.hpp"
#include "polar/partitions.hpp"
#include "util.hpp"

using namespace polar;
using testutil::mk;
using testutil::mkIdeal;

TEST_CASE("edge ideals") {
    CHECK(edge_ideal(complete_graph(3)) == squarefree_power_ideal(3, 2));
    CHECK(edge_ideal(complete_graph(5)) == squarefree_power_ideal(5, 2));
    SimpleGraph path;
    path.vertices = {{1, 1}, {2, 1}, {3, 1}};
    path.edges = {{0, 1}, {1, 2}};
    CHECK(edge_ideal(path) == mkIdeal(3, {mk({{1, 1, 1}, {2, 1, 1}}), mk({{2, 1, 1}, {3, 1, 1}})}));
}

TEST_CASE("valid splits on K_3 and the path") {
    auto k3 = complete_graph(3);
    auto splits = valid_splits(k3, 0);
    REQUIRE(splits.size() == 1);
    CHECK(splits[0] == std::pair<std::vector<int>, std::vector<int>>{{1}, {2}});

    SimpleGraph path;
    path.vertices = {{1, 1}, {2, 1}, {3, 1}};
    path.edges = {{0, 1}, {1, 2}};
    CHECK(valid_splits(path, 1).empty());  // link {0,2} is not an edge
}

TEST_CASE("valid splits on K_4") {
    auto splits = valid_splits(complete_graph(4), 0);
    CHECK(splits.size() == 3);  // {2}|{3,4}, {3}|{2,4}, {4}|{2,3} as indices
}

TEST_CASE("split_vertex on K_3") {
    auto k3 = complete_graph(3);
    auto split = split_vertex(k3, 0, {{1}, {2}});
    CHECK(split.vertices == std::vector<VarRef>{{1, 1}, {2, 1}, {3, 1}, {1, 2}});
    // edges: 1-2, 1'-3, 2-3
    CHECK(edge_ideal(split) ==
          mkIdeal(3, {mk({{1, 1, 1}, {2, 1, 1}}), mk({{1, 2, 1}, {3, 1, 1}}),
                      mk({{2, 1, 1}, {3, 1, 1}})}));
    CHECK(is_polarization(edge_ideal(split), edge_ideal(k3)).ok);
    CHECK(depolarize(edge_ideal(split)).ideal == edge_ideal(k3));
}

TEST_CASE("invalid split rejected") {
    SimpleGraph path;
    path.vertices = {{1, 1}, {2, 1}, {3, 1}};
    path.edges = {{0, 1}, {1, 2}};
    CHECK_THROWS(split_vertex(path, 1, {{0}, {2}}));
}

TEST_CASE("every accepted split passes the Hilbert oracle") {
    for (int n = 3; n <= 5; ++n) {
        auto g = complete_graph(n);
        auto target = edge_ideal(g);
        for (const auto& split : valid_splits(g, 0))
            CHECK(is_polarization(edge_ideal(split_vertex(g, 0, split)), target).ok);
    }
}

TEST_CASE("splits of K_n match 2-part d=2 partition families") {
    // splitting vertex i of K_n = splitting Sigma_i^2 into two parts; both
    // sides of the bijection must agree with the d2 criterion
    int n = 5;
    auto g = complete_graph(n);
    int accepted = static_cast<int>(valid_splits(g, 0).size());
    int passing = 0;
    // all 2-part splits of Sigma_1 = {2..5} with everything else trivial
    auto sigma = sigma_set(n, 2, 1);
    for (uint32_t pick = 1; pick < (uint32_t{1} << (sigma.size() - 1)); ++pick) {
        PartitionFamily family;
        family.n = n;
        family.d = 2;
        family.parts.assign(static_cast<size_t>(n), {});
        std::vector<Subset> a, b;
        a.push_back(sigma[0]);
        for (size_t k = 1; k < sigma.size(); ++k)
            ((pick >> (k - 1)) & 1 ? b : a).push_back(sigma[k]);
        if (b.empty()) continue;
        family.parts[0] = {a, b};
        for (int i = 2; i <= n; ++i) family.parts[static_cast<size_t>(i - 1)] = {sigma_set(n, 2, i)};
        if (d2_criterion(family)) ++passing;
    }
    CHECK(passing == accepted);
}

TEST_CASE("neighbors and indexOf") {
    auto k4 = complete_graph(4);
    CHECK(k4.neighbors(2) == std::vector<int>{0, 1, 3});
    CHECK(k4.indexOf(VarRef{3, 1}) == 2);
    CHECK(k4.indexOf(VarRef{3, 2}) == -1);
}

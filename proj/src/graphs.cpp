#include "polar/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polar {

int SimpleGraph::indexOf(VarRef v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return static_cast<int>(i);
    return -1;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g;
    for (int i = 1; i <= n; ++i) g.vertices.push_back(VarRef{i, 1});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

MonomialIdeal edge_ideal(const SimpleGraph& graph) {
    int n = 0;
    for (const auto& v : graph.vertices) n = std::max(n, v.base);
    std::vector<SplitMonomial> gens;
    for (auto [a, b] : graph.edges) {
        if (a == b) throw std::invalid_argument("edge_ideal: loop");
        gens.emplace_back(std::vector<std::pair<VarRef, int>>{
            {graph.vertices[static_cast<size_t>(a)], 1}, {graph.vertices[static_cast<size_t>(b)], 1}});
    }
    return minimalize(n, std::move(gens));
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> valid_splits(const SimpleGraph& graph,
                                                                        int vertex) {
    std::vector<int> link = graph.neighbors(vertex);
    if (link.size() > 20) throw std::invalid_argument("valid_splits: neighborhood too large");
    std::set<std::pair<int, int>> edgeSet(graph.edges.begin(), graph.edges.end());
    auto adjacent = [&](int a, int b) {
        return edgeSet.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
    if (link.size() < 2) return splits;
    // unordered pairs: pin link[0] to side A
    for (uint32_t pick = 1; pick < (uint32_t{1} << (link.size() - 1)); ++pick) {
        std::vector<int> a{link[0]}, b;
        for (size_t p = 1; p < link.size(); ++p) ((pick >> (p - 1)) & 1 ? b : a).push_back(link[p]);
        bool complete = true;
        for (int u : a)
            for (int v : b)
                if (!adjacent(u, v)) {
                    complete = false;
                    break;
                }
        if (complete) splits.emplace_back(std::move(a), std::move(b));
    }
    return splits;
}

SimpleGraph split_vertex(const SimpleGraph& graph, int vertex,
                         const std::pair<std::vector<int>, std::vector<int>>& split) {
    auto valid = valid_splits(graph, vertex);
    auto normalized = split;
    std::sort(normalized.first.begin(), normalized.first.end());
    std::sort(normalized.second.begin(), normalized.second.end());
    bool found = false;
    for (auto& [a, b] : valid)
        if ((a == normalized.first && b == normalized.second) ||
            (a == normalized.second && b == normalized.first)) {
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("split_vertex: not a valid split");

    SimpleGraph out = graph;
    VarRef old = graph.vertices[static_cast<size_t>(vertex)];
    int maxCopy = 0;
    for (const auto& v : graph.vertices)
        if (v.base == old.base) maxCopy = std::max(maxCopy, v.copy);
    VarRef fresh{old.base, maxCopy + 1};
    int freshIdx = static_cast<int>(out.vertices.size());
    out.vertices.push_back(fresh);

    std::vector<std::pair<int, int>> edges;
    std::set<int> sideB(split.second.begin(), split.second.end());
    for (auto [a, b] : out.edges) {
        int u = a, v = b;
        if (u == vertex && sideB.count(v)) u = freshIdx;
        if (v == vertex && sideB.count(u)) v = freshIdx;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    out.edges = std::move(edges);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace polar

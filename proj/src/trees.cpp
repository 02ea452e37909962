#include "polar/trees.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polar {

namespace {

// component of `start` in the tree with edge `skip` removed
std::vector<bool> componentOf(const LabeledTree& tree, size_t skip, int start) {
    std::vector<bool> in(static_cast<size_t>(tree.n) + 1, false);
    in[static_cast<size_t>(start)] = true;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (size_t e = 0; e < tree.edges.size(); ++e) {
            if (e == skip) continue;
            auto [a, b] = tree.edges[e];
            int other = a == v ? b : (b == v ? a : 0);
            if (other && !in[static_cast<size_t>(other)]) {
                in[static_cast<size_t>(other)] = true;
                stack.push_back(other);
            }
        }
    }
    return in;
}

}  // namespace

bool is_valid_tree(const LabeledTree& tree) {
    if (tree.n < 2 || static_cast<int>(tree.edges.size()) != tree.n - 1) return false;
    for (auto [v, w] : tree.edges)
        if (v < 1 || v > tree.n || w < 1 || w > tree.n || v == w) return false;
    auto in = componentOf(tree, tree.edges.size(), 1);
    return std::count(in.begin(), in.end(), true) == tree.n;
}

std::vector<LabeledTree> enumerate_spanning_trees(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("enumerate_spanning_trees: n out of range");
    std::vector<std::pair<int, int>> allEdges;
    for (int v = 1; v <= n; ++v)
        for (int w = v + 1; w <= n; ++w) allEdges.emplace_back(v, w);

    std::vector<LabeledTree> trees;
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == n - 1) {
            LabeledTree t{n, {}};
            for (size_t e : pick) t.edges.push_back(allEdges[e]);
            if (is_valid_tree(t)) trees.push_back(std::move(t));
            return;
        }
        for (size_t e = from; e < allEdges.size(); ++e) {
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return trees;
}

MonomialIdeal tree_polarization(const LabeledTree& tree) {
    if (!is_valid_tree(tree)) throw std::invalid_argument("tree_polarization: invalid tree");
    std::vector<std::vector<std::pair<VarRef, int>>> label(static_cast<size_t>(tree.n) + 1);
    for (size_t e = 0; e < tree.edges.size(); ++e) {
        auto [v, w] = tree.edges[e];
        auto inV = componentOf(tree, e, v);
        for (int u = 1; u <= tree.n; ++u) {
            int base = inV[static_cast<size_t>(u)] ? w : v;
            label[static_cast<size_t>(u)].emplace_back(VarRef{base, static_cast<int>(e) + 1}, 1);
        }
    }
    std::vector<SplitMonomial> gens;
    for (int u = 1; u <= tree.n; ++u) gens.emplace_back(std::move(label[static_cast<size_t>(u)]));
    return minimalize(tree.n, std::move(gens));
}

MonomialIdeal tree_dual(const LabeledTree& tree) {
    if (!is_valid_tree(tree)) throw std::invalid_argument("tree_dual: invalid tree");
    // adjacency with edge labels
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(tree.n) + 1);
    for (size_t e = 0; e < tree.edges.size(); ++e) {
        auto [v, w] = tree.edges[e];
        adj[static_cast<size_t>(v)].emplace_back(w, static_cast<int>(e) + 1);
        adj[static_cast<size_t>(w)].emplace_back(v, static_cast<int>(e) + 1);
    }
    // firstLabel[i][j] = label of the first edge on the unique i -> j path
    std::vector<std::vector<int>> firstLabel(static_cast<size_t>(tree.n) + 1,
                                             std::vector<int>(static_cast<size_t>(tree.n) + 1, 0));
    for (int i = 1; i <= tree.n; ++i) {
        std::vector<int> stack{i};
        std::vector<bool> seen(static_cast<size_t>(tree.n) + 1, false);
        seen[static_cast<size_t>(i)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, lab] : adj[static_cast<size_t>(v)]) {
                if (seen[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = true;
                firstLabel[static_cast<size_t>(i)][static_cast<size_t>(w)] =
                    v == i ? lab : firstLabel[static_cast<size_t>(i)][static_cast<size_t>(v)];
                stack.push_back(w);
            }
        }
    }
    std::vector<SplitMonomial> gens;
    for (int i = 1; i <= tree.n; ++i)
        for (int j = i + 1; j <= tree.n; ++j) {
            int p = firstLabel[static_cast<size_t>(i)][static_cast<size_t>(j)];
            int q = firstLabel[static_cast<size_t>(j)][static_cast<size_t>(i)];
            gens.emplace_back(std::vector<std::pair<VarRef, int>>{{VarRef{i, p}, 1}, {VarRef{j, q}, 1}});
        }
    return minimalize(tree.n, std::move(gens));
}

LinearRelationGraph linear_relation_graph(const MonomialIdeal& ideal) {
    if (ideal.gens.empty()) return {};
    int deg = ideal.gens[0].degree();
    for (const auto& g : ideal.gens)
        if (g.degree() != deg) throw std::invalid_argument("linear_relation_graph: not equigenerated");

    LinearRelationGraph graph;
    graph.count = static_cast<int>(ideal.gens.size());
    for (int a = 0; a < graph.count; ++a)
        for (int b = a + 1; b < graph.count; ++b)
            if (ideal.gens[static_cast<size_t>(a)].lcm(ideal.gens[static_cast<size_t>(b)]).degree() == deg + 1)
                graph.edges.insert({a, b});

    std::vector<bool> seen(static_cast<size_t>(graph.count), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : graph.edges) {
            int other = a == v ? b : (b == v ? a : -1);
            if (other >= 0 && !seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = true;
                ++reached;
                stack.push_back(other);
            }
        }
    }
    graph.connected = reached == graph.count;
    return graph;
}

std::vector<int> generator_vertices(const MonomialIdeal& ideal) {
    std::vector<int> vertices;
    for (const auto& g : ideal.gens) {
        std::vector<bool> present(static_cast<size_t>(ideal.n) + 1, false);
        for (const auto& [v, e] : g.exponents()) present[static_cast<size_t>(v.base)] = true;
        int missing = 0;
        for (int b = 1; b <= ideal.n; ++b)
            if (!present[static_cast<size_t>(b)]) {
                if (missing) throw std::invalid_argument("generator_vertices: generator omits two bases");
                missing = b;
            }
        if (!missing) throw std::invalid_argument("generator_vertices: generator omits no base");
        vertices.push_back(missing);
    }
    return vertices;
}

}  // namespace polar

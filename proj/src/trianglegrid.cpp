#include "polar/trianglegrid.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polar {

namespace {

constexpr int kX = 1, kY = 2, kZ = 3;

std::map<std::array<int, 3>, int> indexOf(const std::vector<std::array<int, 3>>& triples) {
    std::map<std::array<int, 3>, int> idx;
    for (size_t i = 0; i < triples.size(); ++i) idx[triples[i]] = static_cast<int>(i);
    return idx;
}

// grid embedding: vertex (a,b,c) sits at (2c + a, a); rows are x-degree
std::pair<int, int> position(const std::array<int, 3>& v) { return {2 * v[2] + v[0], v[0]}; }

// the six unit directions in counterclockwise order starting east
constexpr std::array<std::pair<int, int>, 6> kDirections{
    {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}}};

int directionIndex(std::pair<int, int> from, std::pair<int, int> to) {
    std::pair<int, int> delta{to.first - from.first, to.second - from.second};
    for (int k = 0; k < 6; ++k)
        if (kDirections[static_cast<size_t>(k)] == delta) return k;
    throw std::logic_error("directionIndex: not a grid direction");
}

SplitMonomial gridLabel(const std::array<int, 3>& v) {
    std::vector<std::pair<VarRef, int>> exps;
    for (int base = 1; base <= 3; ++base)
        if (v[static_cast<size_t>(base - 1)] > 0)
            exps.emplace_back(VarRef{base, 1}, v[static_cast<size_t>(base - 1)]);
    return SplitMonomial(std::move(exps));
}

// the removed edge of a down triangle, as vertex triples
std::pair<std::array<int, 3>, std::array<int, 3>> removedEdge(const std::array<int, 3>& m,
                                                              TriangleType type) {
    std::array<int, 3> mxy{m[0] + 1, m[1] + 1, m[2]};
    std::array<int, 3> mxz{m[0] + 1, m[1], m[2] + 1};
    std::array<int, 3> myz{m[0], m[1] + 1, m[2] + 1};
    switch (type) {
        case TriangleType::X: return {mxy, mxz};
        case TriangleType::Y: return {mxy, myz};
        default: return {mxz, myz};
    }
}

struct Grid {
    std::vector<std::array<int, 3>> vertices;
    std::map<std::array<int, 3>, int> vertexIdx;
    std::vector<std::pair<int, int>> edges;  // (min, max) vertex indices
    std::map<std::pair<int, int>, int> edgeIdx;

    void addEdge(int u, int v) {
        std::pair<int, int> key = std::minmax(u, v);
        edgeIdx[{key.first, key.second}] = static_cast<int>(edges.size());
        edges.emplace_back(key.first, key.second);
    }
};

Grid makeGrid(int d, const TriangleChoice* removals) {
    Grid g;
    g.vertices = exponent_triples(d);
    g.vertexIdx = indexOf(g.vertices);

    std::set<std::pair<int, int>> removed;
    if (removals)
        for (size_t t = 0; t < removals->choices.size(); ++t) {
            auto m = exponent_triples(d - 2)[t];
            auto [p, q] = removedEdge(m, removals->choices[t]);
            std::pair<int, int> key = std::minmax(g.vertexIdx.at(p), g.vertexIdx.at(q));
            removed.insert({key.first, key.second});
        }

    for (size_t u = 0; u < g.vertices.size(); ++u) {
        auto [a, b, c] = g.vertices[u];
        // each linear-syzygy pair generated once, from its lex-larger end
        const std::array<std::array<int, 3>, 3> steps{
            {{a - 1, b + 1, c}, {a - 1, b, c + 1}, {a, b - 1, c + 1}}};
        for (const auto& w : steps) {
            if (w[0] < 0 || w[1] < 0 || w[2] < 0) continue;
            std::pair<int, int> key = std::minmax(static_cast<int>(u), g.vertexIdx.at(w));
            if (removed.count({key.first, key.second})) continue;
            g.addEdge(key.first, key.second);
        }
    }
    return g;
}

// 2-cell from a closed dart cycle; edge signs follow the traversal
CellFace polygonFace(const Grid& g, int edgeFaceOffset,
                     const std::vector<std::pair<int, int>>& cycle) {
    CellFace face;
    face.dim = 2;
    std::set<std::pair<int, int>> seenDarts;
    std::set<int> verts;
    for (auto [u, v] : cycle) {
        if (seenDarts.count({v, u}))
            throw std::logic_error("build_delta_complex: region touches an edge twice");
        seenDarts.insert({u, v});
        std::pair<int, int> key = std::minmax(u, v);
        face.facets.emplace_back(edgeFaceOffset + g.edgeIdx.at({key.first, key.second}),
                                 u < v ? 1 : -1);
        verts.insert(u);
    }
    face.vertices.assign(verts.begin(), verts.end());
    return face;
}

using Chain = std::vector<uint32_t>;  // s_{i,0..i} as bitmasks, bit k-1 = element k

// one axis of the construction; consult(i, j) says whether the union
// rule fires when extending row i at step j
template <typename Consult>
std::vector<Chain> buildChains(int d, Consult consult) {
    std::vector<Chain> s(static_cast<size_t>(d) + 1);
    s[0] = {0u};
    s[1] = {0u, 1u};
    for (int i = 1; i < d; ++i) {
        Chain primed(s[static_cast<size_t>(i)].size());
        for (size_t j = 0; j < primed.size(); ++j)
            primed[j] = s[static_cast<size_t>(i)][j] | (uint32_t{1} << i);
        Chain next{0u};
        for (int j = 0; j <= i; ++j) {
            uint32_t value;
            if (j < i && consult(i, j))
                value = next[static_cast<size_t>(j)] |
                        (primed[static_cast<size_t>(j) + 1] & ~primed[static_cast<size_t>(j)]);
            else
                value = primed[static_cast<size_t>(j)];
            next.push_back(value);
        }
        s[static_cast<size_t>(i) + 1] = std::move(next);
    }
    return s;
}

// generators in exponent_triples(d) order
std::vector<SplitMonomial> polarizedGenerators(const TriangleChoice& choice) {
    int d = choice.d;
    auto xChains = buildChains(d, [&](int i, int j) {
        return choice.at(i - 1 - j, j, d - i - 1) == TriangleType::X;
    });
    auto yChains = buildChains(d, [&](int i, int j) {
        return choice.at(j, i - 1 - j, d - i - 1) == TriangleType::Y;
    });
    auto zChains = buildChains(d, [&](int i, int j) {
        return choice.at(d - i - 1, j, i - 1 - j) == TriangleType::Z;
    });

    auto copies = [](const std::vector<Chain>& chains, int i, int j,
                     std::vector<std::pair<VarRef, int>>& out, int base) {
        uint32_t full = i ? (uint32_t{1} << i) - 1 : 0;
        uint32_t mask = full & ~chains[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int k = 1; k <= i; ++k)
            if ((mask >> (k - 1)) & 1) out.emplace_back(VarRef{base, k}, 1);
    };

    std::vector<SplitMonomial> gens;
    for (auto [a, b, c] : exponent_triples(d)) {
        std::vector<std::pair<VarRef, int>> exps;
        copies(xChains, a + b, b, exps, kX);
        copies(yChains, a + b, a, exps, kY);
        copies(zChains, b + c, b, exps, kZ);
        gens.emplace_back(std::move(exps));
    }
    return gens;
}

}  // namespace

std::vector<std::array<int, 3>> exponent_triples(int deg) {
    std::vector<std::array<int, 3>> out;
    for (int a = deg; a >= 0; --a)
        for (int b = deg - a; b >= 0; --b) out.push_back({a, b, deg - a - b});
    return out;
}

TriangleType TriangleChoice::at(int a, int b, int c) const {
    auto triples = exponent_triples(d - 2);
    for (size_t t = 0; t < triples.size(); ++t)
        if (triples[t] == std::array<int, 3>{a, b, c}) return choices[t];
    throw std::invalid_argument("TriangleChoice::at: not a down triangle");
}

bool TriangleChoice::valid() const {
    return d >= 2 && static_cast<int>(choices.size()) == (d - 1) * d / 2;
}

LabeledCellComplex gamma_complex(int d) {
    if (d < 2) throw std::invalid_argument("gamma_complex: d must be at least 2");
    Grid g = makeGrid(d, nullptr);

    LabeledCellComplex x;
    for (const auto& v : g.vertices) {
        x.vertexLabels.push_back(gridLabel(v));
        x.faces.push_back(CellFace{0, {}, {static_cast<int>(x.faces.size())}});
    }
    for (auto [u, v] : g.edges) x.faces.push_back(CellFace{1, {{u, -1}, {v, 1}}, {u, v}});

    int nVerts = static_cast<int>(g.vertices.size());
    auto addTriangle = [&](std::array<int, 3> p, std::array<int, 3> q, std::array<int, 3> r) {
        std::array<int, 3> idx{g.vertexIdx.at(p), g.vertexIdx.at(q), g.vertexIdx.at(r)};
        std::sort(idx.begin(), idx.end());
        auto edge = [&](int s, int t) { return nVerts + g.edgeIdx.at({s, t}); };
        x.faces.push_back(CellFace{2,
                                   {{edge(idx[0], idx[1]), 1},
                                    {edge(idx[1], idx[2]), 1},
                                    {edge(idx[0], idx[2]), -1}},
                                   {idx[0], idx[1], idx[2]}});
    };
    for (auto [a, b, c] : exponent_triples(d - 1))  // up triangles
        addTriangle({a + 1, b, c}, {a, b + 1, c}, {a, b, c + 1});
    for (auto [a, b, c] : exponent_triples(d - 2))  // down triangles
        addTriangle({a, b + 1, c + 1}, {a + 1, b, c + 1}, {a + 1, b + 1, c});
    return x;
}

MonomialIdeal construct_polarization(const TriangleChoice& choice) {
    if (!choice.valid()) throw std::invalid_argument("construct_polarization: invalid choice");
    return minimalize(3, polarizedGenerators(choice));
}

LabeledCellComplex build_delta_complex(const TriangleChoice& choice) {
    if (!choice.valid()) throw std::invalid_argument("build_delta_complex: invalid choice");
    Grid g = makeGrid(choice.d, &choice);

    LabeledCellComplex x;
    x.vertexLabels = polarizedGenerators(choice);
    for (size_t v = 0; v < g.vertices.size(); ++v)
        x.faces.push_back(CellFace{0, {}, {static_cast<int>(v)}});
    for (auto [u, v] : g.edges) x.faces.push_back(CellFace{1, {{u, -1}, {v, 1}}, {u, v}});

    // rotation system: outgoing darts per vertex, slot = direction index
    std::vector<std::array<int, 6>> out(g.vertices.size());
    for (auto& slots : out) slots.fill(-1);
    for (auto [u, v] : g.edges) {
        auto pu = position(g.vertices[static_cast<size_t>(u)]);
        auto pv = position(g.vertices[static_cast<size_t>(v)]);
        out[static_cast<size_t>(u)][static_cast<size_t>(directionIndex(pu, pv))] = v;
        out[static_cast<size_t>(v)][static_cast<size_t>(directionIndex(pv, pu))] = u;
    }

    // trace dart orbits; each bounded region comes out counterclockwise
    std::set<std::pair<int, int>> visited;
    for (auto [e0, e1] : g.edges) {
        for (auto start : {std::pair{e0, e1}, std::pair{e1, e0}}) {
            if (visited.count(start)) continue;
            std::vector<std::pair<int, int>> cycle;
            auto dart = start;
            long long area2 = 0;
            do {
                visited.insert(dart);
                cycle.push_back(dart);
                auto [u, v] = dart;
                auto pu = position(g.vertices[static_cast<size_t>(u)]);
                auto pv = position(g.vertices[static_cast<size_t>(v)]);
                area2 += static_cast<long long>(pu.first) * pv.second -
                         static_cast<long long>(pv.first) * pu.second;
                int back = directionIndex(pv, pu);
                int w = -1;
                for (int step = 1; step <= 6 && w < 0; ++step)
                    w = out[static_cast<size_t>(v)][static_cast<size_t>((back + 6 - step) % 6)];
                dart = {v, w};
            } while (dart != start);
            if (area2 > 0)
                x.faces.push_back(polygonFace(g, static_cast<int>(g.vertices.size()), cycle));
        }
    }
    return x;
}

std::string render_svg(const TriangleChoice& choice) {
    if (!choice.valid()) throw std::invalid_argument("render_svg: invalid choice");
    Grid g = makeGrid(choice.d, &choice);
    auto labels = polarizedGenerators(choice);

    int width = 60 * choice.d + 120, height = 52 * choice.d + 110;
    auto px = [&](std::pair<int, int> p) { return 60 + 30 * p.first; };
    auto py = [&](std::pair<int, int> p) { return 40 + 52 * (choice.d - p.second); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    for (auto [u, v] : g.edges) {
        auto pu = position(g.vertices[static_cast<size_t>(u)]);
        auto pv = position(g.vertices[static_cast<size_t>(v)]);
        svg << "  <line x1=\"" << px(pu) << "\" y1=\"" << py(pu) << "\" x2=\"" << px(pv)
            << "\" y2=\"" << py(pv) << "\" stroke=\"black\"/>\n";
    }
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        auto p = position(g.vertices[v]);
        svg << "  <circle cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"3\"/>\n"
            << "  <text x=\"" << px(p) + 5 << "\" y=\"" << py(p) - 5
            << "\" font-size=\"9\">" << labels[v].str() << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace polar

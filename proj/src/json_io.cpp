#include "polar/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace polar {

using nlohmann::json;

namespace {

int asInt(const json& j, const char* what) {
    if (!j.is_number_integer()) throw std::invalid_argument(std::string("expected integer ") + what);
    return j.get<int>();
}

std::vector<Subset> partFromJson(const json& j) {
    std::vector<Subset> part;
    for (const auto& subset : j) {
        Subset mask = 0;
        for (const auto& el : subset) {
            int k = asInt(el, "subset element");
            if (k < 1 || k > 31) throw std::invalid_argument("subset element out of range");
            mask |= Subset{1} << (k - 1);
        }
        part.push_back(mask);
    }
    return part;
}

json subsetToJson(Subset mask) {
    json out = json::array();
    for (int k = 1; k <= 31; ++k)
        if ((mask >> (k - 1)) & 1) out.push_back(k);
    return out;
}

}  // namespace

json monomial_to_json(const SplitMonomial& m) {
    json out = json::array();
    for (const auto& [v, e] : m.exponents()) {
        if (e == 1)
            out.push_back(json::array({v.base, v.copy}));
        else
            out.push_back(json::array({v.base, v.copy, e}));
    }
    return out;
}

SplitMonomial monomial_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("monomial must be an array");
    std::vector<std::pair<VarRef, int>> exps;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() < 2 || entry.size() > 3)
            throw std::invalid_argument("monomial entry must be [base, copy(, exponent)]");
        VarRef v{asInt(entry[0], "base"), asInt(entry[1], "copy")};
        int e = entry.size() == 3 ? asInt(entry[2], "exponent") : 1;
        if (v.base < 1 || v.copy < 1 || e < 1)
            throw std::invalid_argument("monomial entries must be positive");
        exps.emplace_back(v, e);
    }
    return SplitMonomial(std::move(exps));
}

json ideal_to_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.gens) gens.push_back(monomial_to_json(g));
    return json{{"n", ideal.n}, {"generators", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw std::invalid_argument("ideal must be {\"n\", \"generators\"}");
    int n = asInt(j["n"], "n");
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<SplitMonomial> gens;
    for (const auto& g : j["generators"]) gens.push_back(monomial_from_json(g));
    for (const auto& g : gens)
        for (const auto& [v, e] : g.exponents())
            if (v.base > n) throw std::invalid_argument("generator uses a base beyond n");
    return minimalize(n, std::move(gens));
}

json partition_to_json(const PartitionFamily& family) {
    json parts = json::object();
    for (int i = 1; i <= family.n; ++i) {
        json sigma = json::array();
        for (const auto& part : family.parts[static_cast<size_t>(i - 1)]) {
            json p = json::array();
            for (Subset s : part) p.push_back(subsetToJson(s));
            sigma.push_back(std::move(p));
        }
        parts[std::to_string(i)] = std::move(sigma);
    }
    return json{{"n", family.n}, {"d", family.d}, {"parts", std::move(parts)}};
}

PartitionFamily partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("parts"))
        throw std::invalid_argument("partition must be {\"n\", \"d\", \"parts\"}");
    PartitionFamily family;
    family.n = asInt(j["n"], "n");
    family.d = asInt(j["d"], "d");
    family.parts.resize(static_cast<size_t>(family.n));
    for (int i = 1; i <= family.n; ++i) {
        auto key = std::to_string(i);
        if (!j["parts"].contains(key))
            throw std::invalid_argument("parts missing entry for " + key);
        for (const auto& part : j["parts"][key])
            family.parts[static_cast<size_t>(i - 1)].push_back(partFromJson(part));
    }
    if (auto err = validate_family(family)) throw std::invalid_argument(*err);
    return family;
}

json tree_to_json(const LabeledTree& tree) {
    json edges = json::array();
    for (auto [v, w] : tree.edges) edges.push_back(json::array({v, w}));
    return json{{"n", tree.n}, {"edges", std::move(edges)}};
}

LabeledTree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("tree must be {\"n\", \"edges\"}");
    LabeledTree tree;
    tree.n = asInt(j["n"], "n");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [v, w]");
        tree.edges.emplace_back(asInt(e[0], "edge end"), asInt(e[1], "edge end"));
    }
    if (!is_valid_tree(tree)) throw std::invalid_argument("edges do not form a spanning tree");
    return tree;
}

json graph_to_json(const SimpleGraph& graph) {
    json vertices = json::array(), edges = json::array();
    for (const auto& v : graph.vertices) vertices.push_back(json::array({v.base, v.copy}));
    for (auto [u, v] : graph.edges) edges.push_back(json::array({u, v}));
    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph must be {\"vertices\", \"edges\"}");
    SimpleGraph graph;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2) throw std::invalid_argument("vertex must be [base, copy]");
        graph.vertices.push_back(VarRef{asInt(v[0], "base"), asInt(v[1], "copy")});
    }
    int nVerts = static_cast<int>(graph.vertices.size());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u, v]");
        int u = asInt(e[0], "edge end"), v = asInt(e[1], "edge end");
        if (u < 0 || v < 0 || u >= nVerts || v >= nVerts || u == v)
            throw std::invalid_argument("edge endpoint out of range");
        graph.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return graph;
}

json complex_to_json(const LabeledCellComplex& complex) {
    json faces = json::array();
    for (const auto& f : complex.faces) {
        json facets = json::array();
        for (auto [g, sign] : f.facets) facets.push_back(json::array({g, sign}));
        faces.push_back(json{{"dim", f.dim}, {"facets", std::move(facets)}, {"vertices", f.vertices}});
    }
    json labels = json::array();
    for (const auto& m : complex.vertexLabels) labels.push_back(monomial_to_json(m));
    return json{{"faces", std::move(faces)}, {"labels", std::move(labels)}};
}

LabeledCellComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("faces") || !j.contains("labels"))
        throw std::invalid_argument("complex must be {\"faces\", \"labels\"}");
    LabeledCellComplex complex;
    for (const auto& f : j["faces"]) {
        CellFace face;
        face.dim = asInt(f.at("dim"), "dim");
        for (const auto& facet : f.at("facets")) {
            if (!facet.is_array() || facet.size() != 2)
                throw std::invalid_argument("facet must be [faceIndex, sign]");
            face.facets.emplace_back(asInt(facet[0], "facet index"), asInt(facet[1], "facet sign"));
        }
        for (const auto& v : f.at("vertices")) face.vertices.push_back(asInt(v, "vertex"));
        std::sort(face.vertices.begin(), face.vertices.end());
        complex.faces.push_back(std::move(face));
    }
    for (const auto& m : j["labels"]) complex.vertexLabels.push_back(monomial_from_json(m));
    if (auto err = complex.validate()) throw std::invalid_argument(*err);
    return complex;
}

}  // namespace polar

#include "polar/cellres.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "polar/betti.hpp"
#include "polar/homology.hpp"

namespace polar {

namespace {

// vertex number of each dim-0 face, by rank among dim-0 faces
std::vector<int> vertexNumbers(const LabeledCellComplex& x) {
    std::vector<int> num(x.faces.size(), -1);
    int next = 0;
    for (size_t f = 0; f < x.faces.size(); ++f)
        if (x.faces[f].dim == 0) num[f] = next++;
    return num;
}

}  // namespace

SplitMonomial LabeledCellComplex::faceLabel(int face) const {
    SplitMonomial label;
    for (int v : faces[static_cast<size_t>(face)].vertices)
        label = label.lcm(vertexLabels[static_cast<size_t>(v)]);
    return label;
}

std::vector<int> LabeledCellComplex::facesOfDim(int dim) const {
    std::vector<int> out;
    for (size_t f = 0; f < faces.size(); ++f)
        if (faces[f].dim == dim) out.push_back(static_cast<int>(f));
    return out;
}

bool LabeledCellComplex::boundarySquaresToZero() const {
    for (const auto& face : faces) {
        if (face.dim == 1) {
            int sum = 0;
            for (auto [g, sign] : face.facets) sum += sign;
            if (sum != 0) return false;
        } else if (face.dim >= 2) {
            std::map<int, int> coeff;
            for (auto [g, sign] : face.facets)
                for (auto [h, sign2] : faces[static_cast<size_t>(g)].facets)
                    coeff[h] += sign * sign2;
            for (auto [h, c] : coeff)
                if (c != 0) return false;
        }
    }
    return true;
}

std::optional<std::string> LabeledCellComplex::validate() const {
    int nVertices = 0;
    for (size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        if (face.dim == 0) {
            ++nVertices;
            if (face.vertices.size() != 1 || !face.facets.empty())
                return "malformed vertex face";
        }
        for (auto [g, sign] : face.facets) {
            if (g < 0 || g >= static_cast<int>(faces.size())) return "facet index out of range";
            if (faces[static_cast<size_t>(g)].dim != face.dim - 1) return "facet dimension mismatch";
            if (sign != 1 && sign != -1) return "facet sign must be +-1";
            for (int v : faces[static_cast<size_t>(g)].vertices)
                if (!std::binary_search(face.vertices.begin(), face.vertices.end(), v))
                    return "facet vertices not contained in face";
        }
    }
    if (nVertices != static_cast<int>(vertexLabels.size())) return "label count != vertex count";
    if (!boundarySquaresToZero()) return "boundary does not square to zero";
    return std::nullopt;
}

LabeledCellComplex graph_complex(const std::vector<SplitMonomial>& labels,
                                 const std::vector<std::pair<int, int>>& edges) {
    LabeledCellComplex x;
    x.vertexLabels = labels;
    for (size_t v = 0; v < labels.size(); ++v)
        x.faces.push_back(CellFace{0, {}, {static_cast<int>(v)}});
    for (auto [u, v] : edges) {
        int a = std::min(u, v), b = std::max(u, v);
        x.faces.push_back(CellFace{1, {{a, -1}, {b, 1}}, {a, b}});
    }
    return x;
}

LabeledCellComplex restrict_complex(const LabeledCellComplex& x, const SplitMonomial& b) {
    std::vector<int> keep(x.faces.size(), -1);
    LabeledCellComplex out;
    std::vector<int> vnum = vertexNumbers(x);
    std::vector<int> vertexMap(x.vertexLabels.size(), -1);
    for (size_t f = 0; f < x.faces.size(); ++f) {
        if (!x.faceLabel(static_cast<int>(f)).divides(b)) continue;
        keep[f] = static_cast<int>(out.faces.size());
        CellFace face = x.faces[f];
        for (auto& [g, sign] : face.facets) {
            if (keep[static_cast<size_t>(g)] < 0)
                throw std::logic_error("restrict_complex: not closed under faces");
            g = keep[static_cast<size_t>(g)];
        }
        if (face.dim == 0) {
            int newNum = static_cast<int>(out.vertexLabels.size());
            vertexMap[static_cast<size_t>(face.vertices[0])] = newNum;
            out.vertexLabels.push_back(x.vertexLabels[static_cast<size_t>(face.vertices[0])]);
        }
        for (auto& v : face.vertices) v = vertexMap[static_cast<size_t>(v)];
        out.faces.push_back(std::move(face));
    }
    (void)vnum;
    return out;
}

Acyclicity is_acyclic(const LabeledCellComplex& x) {
    if (x.faces.empty()) return Acyclicity::Empty;
    int topDim = 0;
    for (const auto& f : x.faces) topDim = std::max(topDim, f.dim);

    std::vector<std::vector<int>> byDim(static_cast<size_t>(topDim) + 1);
    std::vector<int> rankInDim(x.faces.size(), -1);
    for (size_t f = 0; f < x.faces.size(); ++f) {
        rankInDim[f] = static_cast<int>(byDim[static_cast<size_t>(x.faces[f].dim)].size());
        byDim[static_cast<size_t>(x.faces[f].dim)].push_back(static_cast<int>(f));
    }
    if (byDim[0].empty()) return Acyclicity::Empty;

    std::vector<int> boundaryRank(static_cast<size_t>(topDim) + 2, 0);
    // augmentation C_0 -> C_{-1}: the all-ones column, rank 1
    boundaryRank[0] = 1;
    for (int k = 1; k <= topDim; ++k) {
        const auto& rows = byDim[static_cast<size_t>(k)];
        const auto& cols = byDim[static_cast<size_t>(k - 1)];
        if (rows.empty() || cols.empty()) continue;
        std::vector<std::vector<long long>> mat(rows.size(), std::vector<long long>(cols.size(), 0));
        for (size_t r = 0; r < rows.size(); ++r)
            for (auto [g, sign] : x.faces[static_cast<size_t>(rows[r])].facets)
                mat[r][static_cast<size_t>(rankInDim[static_cast<size_t>(g)])] += sign;
        boundaryRank[static_cast<size_t>(k)] = rank_exact(mat);
    }

    // H~_{-1} = 1 - rank(augmentation) = 0 here since a vertex exists
    for (int k = 0; k <= topDim; ++k) {
        int h = static_cast<int>(byDim[static_cast<size_t>(k)].size()) -
                boundaryRank[static_cast<size_t>(k)] - boundaryRank[static_cast<size_t>(k) + 1];
        if (h != 0) return Acyclicity::NotAcyclic;
    }
    return Acyclicity::Acyclic;
}

ResolutionCheck supports_resolution(const LabeledCellComplex& x, const MonomialIdeal& ideal) {
    ResolutionCheck check;
    std::vector<SplitMonomial> labels = x.vertexLabels;
    std::sort(labels.begin(), labels.end());
    std::vector<SplitMonomial> gens = ideal.gens;
    std::sort(gens.begin(), gens.end());
    if (labels != gens) {
        check.error = "vertex labels do not match the generators";
        return check;
    }

    std::set<std::vector<char>> seenRestrictions;
    for (const auto& b : lcm_lattice(ideal)) {
        std::vector<char> kept(x.faces.size(), 0);
        for (size_t f = 0; f < x.faces.size(); ++f)
            kept[f] = x.faceLabel(static_cast<int>(f)).divides(b) ? 1 : 0;
        if (!seenRestrictions.insert(kept).second) continue;
        if (is_acyclic(restrict_complex(x, b)) != Acyclicity::Acyclic) {
            check.offendingDegree = b;
            return check;
        }
    }
    check.ok = true;
    return check;
}

bool is_minimal(const LabeledCellComplex& x) {
    for (size_t f = 0; f < x.faces.size(); ++f) {
        SplitMonomial label = x.faceLabel(static_cast<int>(f));
        for (auto [g, sign] : x.faces[f].facets)
            if (x.faceLabel(g) == label) return false;
    }
    return true;
}

std::vector<int> face_counts(const LabeledCellComplex& x) {
    std::vector<int> counts;
    for (const auto& f : x.faces) {
        if (static_cast<size_t>(f.dim) >= counts.size()) counts.resize(static_cast<size_t>(f.dim) + 1, 0);
        ++counts[static_cast<size_t>(f.dim)];
    }
    return counts;
}

}  // namespace polar

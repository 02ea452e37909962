#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polar/ideal.hpp"

namespace polar {

struct CellFace {
    int dim = 0;
    std::vector<std::pair<int, int>> facets;  // (face index, sign); empty for vertices
    std::vector<int> vertices;                // sorted vertex face indices
};

/// Polyhedral cell complex with monomial vertex labels; face labels are
/// the lcm of the vertex labels.  The empty face (label 0) is implicit;
/// the augmentation vertex -> empty face carries sign +1.
struct LabeledCellComplex {
    std::vector<CellFace> faces;
    std::vector<SplitMonomial> vertexLabels;  // indexed by position among dim-0 faces

    SplitMonomial faceLabel(int face) const;
    std::vector<int> facesOfDim(int dim) const;
    /// signed incidence composes to zero
    bool boundarySquaresToZero() const;
    /// faces of faces are present and labels divide upward
    std::optional<std::string> validate() const;
};

/// One-dimensional complex from labeled points and edges (used for the
/// tree-supported resolutions).
LabeledCellComplex graph_complex(const std::vector<SplitMonomial>& labels,
                                 const std::vector<std::pair<int, int>>& edges);

/// Subcomplex of faces whose label divides b.
LabeledCellComplex restrict_complex(const LabeledCellComplex& complex, const SplitMonomial& b);

enum class Acyclicity { Acyclic, NotAcyclic, Empty };

/// Reduced homology over Q vanishes in all degrees.  The empty complex is
/// reported separately.
Acyclicity is_acyclic(const LabeledCellComplex& complex);

struct ResolutionCheck {
    bool ok = false;
    std::optional<SplitMonomial> offendingDegree;  // first b with homology
    std::string error;                             // label/generator mismatch etc.
};

/// The cellular free complex on X resolves I iff every restriction to a
/// multidegree in the lcm lattice is acyclic; vertex labels must match
/// the generators bijectively.
ResolutionCheck supports_resolution(const LabeledCellComplex& complex, const MonomialIdeal& ideal);

/// No face/facet pair shares a label (no unit entries in the differential).
bool is_minimal(const LabeledCellComplex& complex);

/// Face counts per dimension (index 0 = vertices).
std::vector<int> face_counts(const LabeledCellComplex& complex);

}  // namespace polar

#pragma once

#include <optional>
#include <vector>

#include "polar/monomial.hpp"

namespace polar {

/// Monomial ideal given by its minimal generators in canonical order.
/// `n` is the number of base variables of the ambient ring; copy indices
/// on top of those are carried by the generators themselves.
struct MonomialIdeal {
    int n = 0;
    std::vector<SplitMonomial> gens;

    bool isZero() const { return gens.empty(); }
    bool isUnit() const { return gens.size() == 1 && gens[0].isOne(); }

    /// Union of the generator supports.
    std::vector<VarRef> variables() const;

    /// Max copy index per base (r_i), for bases 1..n.
    std::vector<int> copyCounts() const;

    bool operator==(const MonomialIdeal&) const = default;
};

/// Inclusion-minimal antichain of the given generators, deduplicated and
/// canonically sorted.  An empty list gives the zero ideal.
MonomialIdeal minimalize(int n, std::vector<SplitMonomial> gens);

struct DepolarizeResult {
    MonomialIdeal ideal;
    /// true when generator -> image is a bijection onto the minimal
    /// generators of the image (required for polarization candidacy)
    bool bijective = false;
};

/// Merge all copies x_i^(j) back into x_i^(1); exponents add.
DepolarizeResult depolarize(const MonomialIdeal& ideal);

/// Lexicographically minimal relabeling of the copy indices, taken
/// independently per base variable.  Two ideals are isomorphic as
/// polarizations iff their canonical forms are equal.
MonomialIdeal canonical_form(const MonomialIdeal& ideal);

}  // namespace polar

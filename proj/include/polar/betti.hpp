#pragma once

#include <map>
#include <vector>

#include "polar/ideal.hpp"

namespace polar {

/// Multigraded Betti numbers of a monomial ideal I (not S/I):
/// beta_{0,a} counts minimal generators of multidegree a.
struct BettiTable {
    /// (homological index i, multidegree a) -> rank; only nonzero entries
    std::map<std::pair<int, SplitMonomial>, long long> entries;

    /// totals beta_i = sum_a beta_{i,a}
    std::vector<long long> totals() const;
    /// coarse graded totals: (i, |a|) -> sum of ranks
    std::map<std::pair<int, int>, long long> gradedTotals() const;
    long long eulerCharacteristic() const;

    bool operator==(const BettiTable&) const = default;
};

/// Exact multigraded Betti numbers via upper Koszul simplicial complexes:
/// beta_{i,a}(I) = dim H~_{i-1} of K^a = { square-free b <= a : x^{a-b} in I },
/// with a running over the lcm lattice of the generator multidegrees.
BettiTable betti_table(const MonomialIdeal& ideal);

/// The join closure of the generator multidegrees (the lcm lattice minus
/// the bottom element), deduplicated, in canonical order.
std::vector<SplitMonomial> lcm_lattice(const MonomialIdeal& ideal);

}  // namespace polar

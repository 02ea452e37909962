#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polar/ideal.hpp"

namespace polar {

/// Subset of [n] as a bitmask; bit k-1 stands for the element k.
using Subset = uint32_t;

/// For each i in [n], an ordered partition of Sigma_i^d (the (d-1)-subsets
/// of [n] minus i).  Part order carries the copy index j of x_i^(j); two
/// families with the same parts in different order encode the same
/// polarization.
struct PartitionFamily {
    int n = 0;
    int d = 0;
    /// parts[i-1][j-1] = P_{i,j}, each a sorted list of subset masks
    std::vector<std::vector<std::vector<Subset>>> parts;
};

/// Sigma_i^d in canonical (ascending mask) order.
std::vector<Subset> sigma_set(int n, int d, int i);

/// I_d: all square-free monomials of degree d in n variables.
MonomialIdeal squarefree_power_ideal(int n, int d);

/// Empty when valid; otherwise describes the violated invariant.
std::optional<std::string> validate_family(const PartitionFamily& family);

/// Unordered-parts equality.
bool same_family(const PartitionFamily& a, const PartitionFamily& b);

PartitionFamily trivial_partition(int n, int d);

/// sigma lands in P_{i,r} where r-1 elements of sigma are below i.
PartitionFamily box_partition(int n, int d);

/// Splits Sigma_i^d into singletons; every other Sigma is one part.
PartitionFamily single_variable_partition(int n, int d, int i);

/// One square-free generator per sigma in Gamma_d, with copy indices read
/// off the parts.  Claims nothing about being an actual polarization.
MonomialIdeal partition_to_ideal(const PartitionFamily& family);

/// Inverse of partition_to_ideal up to dense renumbering of part indices.
PartitionFamily ideal_to_partition(const MonomialIdeal& ideal);

/// Complement every member within [n] minus i; a family for (n, n-d+1).
PartitionFamily dual_partition(const PartitionFamily& family);

struct CriterionResult {
    bool ok = true;
    // witness on failure: cross-part pair (sigma, tau) inside Sigma_i
    int i = 0;
    Subset sigma = 0;
    Subset tau = 0;
};

/// The combinatorial polarization criterion, quantified verbatim: for
/// every cross-part pair (sigma, tau) in some Sigma_i there must be a
/// d-subset beta of their union whose facets all sit in the same part as
/// the corresponding facet of sigma+i or tau+i.
CriterionResult satisfies_criterion(const PartitionFamily& family);

/// d=2 specialization: whenever j is outside P_{i,s}, the set {i} u P_{i,s}
/// must lie inside a single part of Sigma_j.
bool d2_criterion(const PartitionFamily& family);

/// No one-step refinement (one part split in two) passes the criterion.
/// Requires satisfies_criterion(family).
bool is_maximal(const PartitionFamily& family);

/// Exhaustive sweep over all partition families for (n, d), one RGS-driven
/// set partition per Sigma_i, cross-producted.  Deterministic order.
void for_each_partition_family(int n, int d, const std::function<void(const PartitionFamily&)>& fn);

/// Number of families for_each_partition_family visits: Bell(|Sigma_i|)^n.
long long partition_family_count(int n, int d);

/// Seeded uniform sample of `count` families (with replacement).
void for_random_partition_families(int n, int d, long long count, uint64_t seed,
                                   const std::function<void(const PartitionFamily&)>& fn);

}  // namespace polar

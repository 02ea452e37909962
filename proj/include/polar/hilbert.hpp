#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polar/ideal.hpp"

namespace polar {

/// Integer numerator of the Hilbert series of S/I over (1-t)^{#vars}.
struct HilbertNumerator {
    std::vector<long long> coeffs;  // coeffs[k] is the coefficient of t^k

    long long at(size_t k) const { return k < coeffs.size() ? coeffs[k] : 0; }
    long long evaluateAtOne() const;
    std::string str() const;
    bool operator==(const HilbertNumerator&) const = default;
};

/// Exact numerator via pivot-splitting recursion (split on a variable in
/// >= 2 generators; pairwise-coprime base case uses the product formula).
/// Rejects the unit ideal.
HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal);

/// Mask-based numerator for square-free generator sets over up to 64
/// variables; the hot path behind hilbert_numerator, exposed for sweeps.
HilbertNumerator hilbert_numerator_masks(std::vector<uint64_t> gens);

struct PolarizationCheck {
    bool ok = false;
    std::string reason;  // empty when ok
    HilbertNumerator candidate;
    HilbertNumerator target;
};

/// candidate is a polarization of target iff the depolarization is a
/// generator bijection onto target and the coarse Hilbert numerators
/// agree (the graded difference sequence is regular exactly then).
PolarizationCheck is_polarization(const MonomialIdeal& candidate, const MonomialIdeal& target);
PolarizationCheck is_polarization(const MonomialIdeal& candidate, const MonomialIdeal& target,
                                  const HilbertNumerator& targetNumerator);

}  // namespace polar

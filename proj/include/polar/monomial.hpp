#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polar {

/// A copy-indexed variable x_base^(copy).  A plain variable x_i is
/// VarRef{i, 1}.
struct VarRef {
    int base = 0;
    int copy = 1;

    auto operator<=>(const VarRef&) const = default;
};

/// Monomial over copy-indexed variables, stored as a sorted sparse
/// exponent vector.  Zero exponents are never stored.
class SplitMonomial {
public:
    SplitMonomial() = default;
    explicit SplitMonomial(std::vector<std::pair<VarRef, int>> exps);

    static SplitMonomial variable(VarRef v, int exp = 1);
    static SplitMonomial one() { return SplitMonomial{}; }

    const std::vector<std::pair<VarRef, int>>& exponents() const { return exps_; }
    int exponent(VarRef v) const;
    int degree() const;
    bool isOne() const { return exps_.empty(); }
    bool isSquareFree() const;
    std::vector<VarRef> support() const;

    bool divides(const SplitMonomial& other) const;
    SplitMonomial lcm(const SplitMonomial& other) const;
    SplitMonomial times(const SplitMonomial& other) const;

    /// Quotient other -> this/other, assuming other | this.
    SplitMonomial dividedBy(const SplitMonomial& other) const;

    bool operator==(const SplitMonomial& other) const { return exps_ == other.exps_; }

    /// Canonical order: total degree, then lexicographic on the expanded
    /// sequence of (base, copy) pairs.
    static int compare(const SplitMonomial& a, const SplitMonomial& b);
    bool operator<(const SplitMonomial& other) const { return compare(*this, other) < 0; }

    /// e.g. "x1^(2).x2^(1)" ; exponents > 1 rendered as x1^(1)e2.
    std::string str() const;

private:
    std::vector<std::pair<VarRef, int>> exps_;
};

}  // namespace polar

#include "polar/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace polar {

SplitMonomial::SplitMonomial(std::vector<std::pair<VarRef, int>> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end());
    // merge duplicates, drop zeros
    std::vector<std::pair<VarRef, int>> merged;
    for (const auto& [v, e] : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    exps_ = std::move(merged);
}

SplitMonomial SplitMonomial::variable(VarRef v, int exp) {
    return SplitMonomial{{{v, exp}}};
}

int SplitMonomial::exponent(VarRef v) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), std::make_pair(v, 0));
    if (it != exps_.end() && it->first == v) return it->second;
    return 0;
}

int SplitMonomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

bool SplitMonomial::isSquareFree() const {
    for (const auto& [v, e] : exps_)
        if (e > 1) return false;
    return true;
}

std::vector<VarRef> SplitMonomial::support() const {
    std::vector<VarRef> s;
    s.reserve(exps_.size());
    for (const auto& [v, e] : exps_) s.push_back(v);
    return s;
}

bool SplitMonomial::divides(const SplitMonomial& other) const {
    auto it = other.exps_.begin();
    for (const auto& [v, e] : exps_) {
        while (it != other.exps_.end() && it->first < v) ++it;
        if (it == other.exps_.end() || !(it->first == v) || it->second < e) return false;
    }
    return true;
}

SplitMonomial SplitMonomial::lcm(const SplitMonomial& other) const {
    SplitMonomial out;
    auto a = exps_.begin();
    auto b = other.exps_.begin();
    while (a != exps_.end() || b != other.exps_.end()) {
        if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first))
            out.exps_.push_back(*a++);
        else if (a == exps_.end() || b->first < a->first)
            out.exps_.push_back(*b++);
        else {
            out.exps_.emplace_back(a->first, std::max(a->second, b->second));
            ++a;
            ++b;
        }
    }
    return out;
}

SplitMonomial SplitMonomial::times(const SplitMonomial& other) const {
    std::vector<std::pair<VarRef, int>> all = exps_;
    all.insert(all.end(), other.exps_.begin(), other.exps_.end());
    return SplitMonomial{std::move(all)};
}

SplitMonomial SplitMonomial::dividedBy(const SplitMonomial& other) const {
    if (!other.divides(*this)) throw std::invalid_argument("non-divisible quotient");
    SplitMonomial out;
    auto b = other.exps_.begin();
    for (const auto& [v, e] : exps_) {
        int sub = 0;
        while (b != other.exps_.end() && b->first < v) ++b;
        if (b != other.exps_.end() && b->first == v) sub = b->second;
        if (e - sub > 0) out.exps_.emplace_back(v, e - sub);
    }
    return out;
}

int SplitMonomial::compare(const SplitMonomial& a, const SplitMonomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // lexicographic on the degree-expanded (base, copy) sequences
    auto ia = a.exps_.begin();
    auto ib = b.exps_.begin();
    int ra = 0, rb = 0;  // exponent remaining at current position
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (ra == 0) ra = ia->second;
        if (rb == 0) rb = ib->second;
        int step = std::min(ra, rb);
        ra -= step;
        rb -= step;
        if (ra == 0) ++ia;
        if (rb == 0) ++ib;
    }
    if (ia != a.exps_.end()) return 1;
    if (ib != b.exps_.end()) return -1;
    return 0;
}

std::string SplitMonomial::str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : exps_) {
        if (!s.empty()) s += ".";
        s += "x" + std::to_string(v.base) + "^(" + std::to_string(v.copy) + ")";
        if (e > 1) s += "e" + std::to_string(e);
    }
    return s;
}

}  // namespace polar

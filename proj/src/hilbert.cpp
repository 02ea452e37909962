#include "polar/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace polar {

namespace {

using Poly = std::vector<long long>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void addInto(Poly& acc, const Poly& p, int shift) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
    for (size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

// multiply by (1 - t^d) in place
void mulOneMinus(Poly& p, int d) {
    Poly out(p.size() + static_cast<size_t>(d), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        out[i] += p[i];
        out[i + d] -= p[i];
    }
    p = std::move(out);
}

// ---- square-free mask path ---------------------------------------------

void antichainMasks(std::vector<uint64_t>& gens) {
    std::sort(gens.begin(), gens.end(), [](uint64_t a, uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<uint64_t> minimal;
    for (uint64_t g : gens) {
        bool dominated = false;
        for (uint64_t m : minimal)
            if ((m & ~g) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(g);
    }
    gens = std::move(minimal);
}

Poly numeratorMasks(std::vector<uint64_t>& gens) {
    if (gens.empty()) return Poly{1};
    for (uint64_t g : gens)
        if (g == 0) return Poly{};  // unit ideal

    // pivot: bit present in the most generators (need >= 2)
    uint64_t all = 0, repeated = 0;
    for (uint64_t g : gens) {
        repeated |= all & g;
        all |= g;
    }
    if (repeated == 0) {
        // pairwise coprime: product formula
        Poly p{1};
        for (uint64_t g : gens) mulOneMinus(p, std::popcount(g));
        return p;
    }
    int bestBit = -1, bestCount = 0;
    for (uint64_t r = repeated; r; r &= r - 1) {
        int bit = std::countr_zero(r);
        int count = 0;
        for (uint64_t g : gens)
            if (g >> bit & 1) ++count;
        if (count > bestCount) {
            bestCount = count;
            bestBit = bit;
        }
    }
    uint64_t v = uint64_t{1} << bestBit;

    std::vector<uint64_t> plus;  // I + (v)
    plus.reserve(gens.size());
    for (uint64_t g : gens)
        if (!(g & v)) plus.push_back(g);
    plus.push_back(v);

    std::vector<uint64_t> colon;  // I : v
    colon.reserve(gens.size());
    for (uint64_t g : gens) colon.push_back(g & ~v);
    antichainMasks(colon);

    Poly result = numeratorMasks(plus);
    Poly fromColon = numeratorMasks(colon);
    addInto(result, fromColon, 1);
    return result;
}

// ---- general exponent-vector path --------------------------------------

using Expv = std::vector<int>;

bool dividesExp(const Expv& a, const Expv& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

int degreeExp(const Expv& a) {
    int d = 0;
    for (int e : a) d += e;
    return d;
}

void antichainExp(std::vector<Expv>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Expv& a, const Expv& b) {
        return degreeExp(a) < degreeExp(b);
    });
    std::vector<Expv> minimal;
    for (auto& g : gens) {
        bool dominated = false;
        for (const auto& m : minimal)
            if (dividesExp(m, g)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(std::move(g));
    }
    gens = std::move(minimal);
}

Poly numeratorExp(std::vector<Expv>& gens, size_t nvars) {
    if (gens.empty()) return Poly{1};
    for (const auto& g : gens)
        if (degreeExp(g) == 0) return Poly{};

    int bestVar = -1, bestCount = 0;
    for (size_t v = 0; v < nvars; ++v) {
        int count = 0;
        for (const auto& g : gens)
            if (g[v] > 0) ++count;
        if (count >= 2 && count > bestCount) {
            bestCount = count;
            bestVar = static_cast<int>(v);
        }
    }
    if (bestVar < 0) {
        Poly p{1};
        for (const auto& g : gens) mulOneMinus(p, degreeExp(g));
        return p;
    }

    std::vector<Expv> plus;
    for (const auto& g : gens)
        if (g[bestVar] == 0) plus.push_back(g);
    Expv var(nvars, 0);
    var[bestVar] = 1;
    plus.push_back(std::move(var));

    std::vector<Expv> colon = gens;
    for (auto& g : colon)
        if (g[bestVar] > 0) --g[bestVar];
    antichainExp(colon);

    Poly result = numeratorExp(plus, nvars);
    Poly fromColon = numeratorExp(colon, nvars);
    addInto(result, fromColon, 1);
    return result;
}

}  // namespace

long long HilbertNumerator::evaluateAtOne() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
}

std::string HilbertNumerator::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        long long c = coeffs[k];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        long long a = c > 0 ? c : -c;
        if (a != 1 || k == 0) s += std::to_string(a);
        if (k >= 1) {
            if (a != 1) s += "*";
            s += "t";
            if (k >= 2) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

HilbertNumerator hilbert_numerator_masks(std::vector<uint64_t> gens) {
    antichainMasks(gens);
    Poly p = numeratorMasks(gens);
    trim(p);
    return HilbertNumerator{std::move(p)};
}

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal) {
    if (ideal.isUnit()) throw std::invalid_argument("not a proper ideal");

    bool squareFree = true;
    for (const auto& g : ideal.gens)
        if (!g.isSquareFree()) {
            squareFree = false;
            break;
        }

    std::vector<VarRef> vars = ideal.variables();
    std::map<VarRef, size_t> index;
    for (size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;

    if (squareFree && vars.size() <= 64) {
        std::vector<uint64_t> gens;
        gens.reserve(ideal.gens.size());
        for (const auto& g : ideal.gens) {
            uint64_t m = 0;
            for (const auto& [v, e] : g.exponents()) m |= uint64_t{1} << index[v];
            gens.push_back(m);
        }
        return hilbert_numerator_masks(std::move(gens));
    }

    std::vector<Expv> gens;
    gens.reserve(ideal.gens.size());
    for (const auto& g : ideal.gens) {
        Expv e(vars.size(), 0);
        for (const auto& [v, exp] : g.exponents()) e[index[v]] = exp;
        gens.push_back(std::move(e));
    }
    antichainExp(gens);
    Poly p = numeratorExp(gens, vars.size());
    trim(p);
    return HilbertNumerator{std::move(p)};
}

PolarizationCheck is_polarization(const MonomialIdeal& candidate, const MonomialIdeal& target,
                                  const HilbertNumerator& targetNumerator) {
    PolarizationCheck check;
    check.target = targetNumerator;

    DepolarizeResult depol = depolarize(candidate);
    if (depol.ideal.gens != target.gens) {
        check.reason = "depolarization does not equal the target ideal";
        return check;
    }
    if (!depol.bijective) {
        check.reason = "depolarization collapses generators (not a bijection)";
        return check;
    }
    check.candidate = hilbert_numerator(candidate);
    if (check.candidate != targetNumerator) {
        check.reason = "hilbert numerators differ (difference sequence is not regular)";
        return check;
    }
    check.ok = true;
    return check;
}

PolarizationCheck is_polarization(const MonomialIdeal& candidate, const MonomialIdeal& target) {
    return is_polarization(candidate, target, hilbert_numerator(target));
}

}  // namespace polar

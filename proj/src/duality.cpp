#include "polar/duality.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace polar {

namespace {

// keep only inclusion-minimal masks
void pruneToMinimal(std::vector<uint64_t>& sets) {
    std::sort(sets.begin(), sets.end(), [](uint64_t a, uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<uint64_t> minimal;
    for (uint64_t s : sets) {
        bool dominated = false;
        for (uint64_t m : minimal)
            if ((m & ~s) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(s);
    }
    sets = std::move(minimal);
}

}  // namespace

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    if (ideal.isUnit()) throw std::invalid_argument("alexander_dual: unit ideal");
    if (ideal.isZero()) return ideal;
    for (const auto& g : ideal.gens)
        if (!g.isSquareFree()) throw std::invalid_argument("alexander_dual: non-square-free generator");

    std::vector<VarRef> vars = ideal.variables();
    if (vars.size() > 64) throw std::invalid_argument("alexander_dual: too many vertices");
    std::map<VarRef, size_t> index;
    for (size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;

    std::vector<uint64_t> supports;
    supports.reserve(ideal.gens.size());
    for (const auto& g : ideal.gens) {
        uint64_t m = 0;
        for (const auto& [v, e] : g.exponents()) m |= uint64_t{1} << index[v];
        supports.push_back(m);
    }

    // Berge expansion: fold in one support at a time, pruning to the
    // antichain of minimal transversals after each step
    std::vector<uint64_t> transversals{0};
    for (uint64_t support : supports) {
        std::vector<uint64_t> next;
        for (uint64_t t : transversals) {
            if (t & support) {
                next.push_back(t);
                continue;
            }
            for (uint64_t s = support; s; s &= s - 1)
                next.push_back(t | (s & -s));
        }
        pruneToMinimal(next);
        transversals = std::move(next);
    }

    std::vector<SplitMonomial> gens;
    gens.reserve(transversals.size());
    for (uint64_t t : transversals) {
        std::vector<std::pair<VarRef, int>> exps;
        for (uint64_t s = t; s; s &= s - 1) exps.emplace_back(vars[std::countr_zero(s)], 1);
        gens.emplace_back(std::move(exps));
    }
    return minimalize(ideal.n, std::move(gens));
}

}  // namespace polar

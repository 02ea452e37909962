#include "polar/betti.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "polar/homology.hpp"

namespace polar {

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> t;
    for (const auto& [key, rank] : entries) {
        if (static_cast<size_t>(key.first) >= t.size()) t.resize(key.first + 1, 0);
        t[key.first] += rank;
    }
    return t;
}

std::map<std::pair<int, int>, long long> BettiTable::gradedTotals() const {
    std::map<std::pair<int, int>, long long> t;
    for (const auto& [key, rank] : entries) t[{key.first, key.second.degree()}] += rank;
    return t;
}

long long BettiTable::eulerCharacteristic() const {
    long long chi = 0;
    for (const auto& [key, rank] : entries) chi += (key.first % 2 == 0) ? rank : -rank;
    return chi;
}

std::vector<SplitMonomial> lcm_lattice(const MonomialIdeal& ideal) {
    std::set<SplitMonomial> lattice(ideal.gens.begin(), ideal.gens.end());
    std::vector<SplitMonomial> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty()) {
        std::vector<SplitMonomial> next;
        for (const auto& a : frontier)
            for (const auto& g : ideal.gens) {
                SplitMonomial j = a.lcm(g);
                if (lattice.insert(j).second) next.push_back(std::move(j));
            }
        frontier = std::move(next);
    }
    return {lattice.begin(), lattice.end()};
}

BettiTable betti_table(const MonomialIdeal& ideal) {
    if (ideal.isUnit()) throw std::invalid_argument("betti_table: not a proper ideal");
    BettiTable table;
    if (ideal.isZero()) return table;

    std::vector<VarRef> vars = ideal.variables();
    std::map<VarRef, size_t> index;
    for (size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;

    std::vector<std::vector<int>> genExp(ideal.gens.size(), std::vector<int>(vars.size(), 0));
    for (size_t g = 0; g < ideal.gens.size(); ++g)
        for (const auto& [v, e] : ideal.gens[g].exponents()) genExp[g][index[v]] = e;

    bool squareFree = true;
    for (const auto& g : ideal.gens)
        if (!g.isSquareFree()) squareFree = false;

    for (const auto& a : lcm_lattice(ideal)) {
        std::vector<int> aExp(vars.size(), 0);
        for (const auto& [v, e] : a.exponents()) aExp[index[v]] = e;
        std::vector<size_t> supp;
        for (size_t i = 0; i < vars.size(); ++i)
            if (aExp[i] > 0) supp.push_back(i);
        if (supp.size() > 30) throw std::invalid_argument("betti_table: multidegree support too large");

        std::vector<uint64_t> faces;
        if (squareFree) {
            // gens contained in a, as masks over supp positions
            std::vector<uint64_t> inA;
            for (size_t g = 0; g < genExp.size(); ++g) {
                uint64_t m = 0;
                bool contained = true;
                for (size_t p = 0; p < supp.size() && contained; ++p)
                    if (genExp[g][supp[p]] > 0) m |= uint64_t{1} << p;
                for (size_t i = 0; i < vars.size(); ++i)
                    if (genExp[g][i] > 0 && aExp[i] == 0) contained = false;
                if (contained) inA.push_back(m);
            }
            // cone point: a vertex of a missed by every contained generator
            uint64_t unionGens = 0;
            for (uint64_t m : inA) unionGens |= m;
            if (unionGens != (uint64_t{1} << supp.size()) - 1) continue;  // cone, acyclic

            for (uint64_t b = 0; b < (uint64_t{1} << supp.size()); ++b)
                for (uint64_t m : inA)
                    if ((m & b) == 0) {
                        faces.push_back(b);
                        break;
                    }
        } else {
            for (uint64_t b = 0; b < (uint64_t{1} << supp.size()); ++b) {
                std::vector<int> rest = aExp;  // a - b
                for (size_t p = 0; p < supp.size(); ++p)
                    if (b >> p & 1) rest[supp[p]] -= 1;
                bool member = false;
                for (size_t g = 0; g < genExp.size() && !member; ++g) {
                    member = true;
                    for (size_t i = 0; i < vars.size() && member; ++i)
                        if (genExp[g][i] > rest[i]) member = false;
                }
                if (member) faces.push_back(b);
            }
        }

        std::vector<int> h = reduced_homology(faces);
        for (size_t k = 0; k < h.size(); ++k)
            if (h[k] != 0) table.entries[{static_cast<int>(k), a}] = h[k];
    }
    return table;
}

}  // namespace polar

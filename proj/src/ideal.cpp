#include "polar/ideal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polar {

std::vector<VarRef> MonomialIdeal::variables() const {
    std::set<VarRef> vars;
    for (const auto& g : gens)
        for (const auto& [v, e] : g.exponents()) vars.insert(v);
    return {vars.begin(), vars.end()};
}

std::vector<int> MonomialIdeal::copyCounts() const {
    std::vector<int> r(static_cast<size_t>(n), 0);
    for (const auto& v : variables())
        if (v.base >= 1 && v.base <= n) r[v.base - 1] = std::max(r[v.base - 1], v.copy);
    return r;
}

MonomialIdeal minimalize(int n, std::vector<SplitMonomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<SplitMonomial> minimal;
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& m : minimal)
            if (m.divides(g)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(g);
    }
    return MonomialIdeal{n, std::move(minimal)};
}

DepolarizeResult depolarize(const MonomialIdeal& ideal) {
    std::vector<SplitMonomial> images;
    images.reserve(ideal.gens.size());
    for (const auto& g : ideal.gens) {
        std::vector<std::pair<VarRef, int>> merged;
        for (const auto& [v, e] : g.exponents()) merged.emplace_back(VarRef{v.base, 1}, e);
        images.emplace_back(std::move(merged));
    }
    MonomialIdeal depol = minimalize(ideal.n, images);

    // bijective iff images are pairwise distinct and already an antichain
    std::vector<SplitMonomial> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                     depol.gens.size() == images.size();
    return DepolarizeResult{std::move(depol), bijective};
}

namespace {

SplitMonomial relabel(const SplitMonomial& m, const std::map<VarRef, int>& newCopy) {
    std::vector<std::pair<VarRef, int>> out;
    for (const auto& [v, e] : m.exponents()) out.emplace_back(VarRef{v.base, newCopy.at(v)}, e);
    return SplitMonomial{std::move(out)};
}

int compareGenLists(const std::vector<SplitMonomial>& a, const std::vector<SplitMonomial>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = SplitMonomial::compare(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace

MonomialIdeal canonical_form(const MonomialIdeal& ideal) {
    // used copy indices per base
    std::map<int, std::vector<int>> copies;
    for (const auto& v : ideal.variables()) copies[v.base].push_back(v.copy);

    long long total = 1;
    for (auto& [base, cs] : copies) {
        std::sort(cs.begin(), cs.end());
        for (size_t k = 2; k <= cs.size(); ++k) {
            total *= static_cast<long long>(k);
            if (total > 4'000'000) throw std::runtime_error("canonical_form: relabeling space too large");
        }
    }

    std::vector<int> bases;
    for (const auto& [base, cs] : copies) bases.push_back(base);

    std::optional<std::vector<SplitMonomial>> best;
    std::map<VarRef, int> assignment;

    // enumerate all per-base bijections used-copies -> 1..r_i
    auto dfs = [&](auto&& self, size_t idx) -> void {
        if (idx == bases.size()) {
            std::vector<SplitMonomial> relabeled;
            relabeled.reserve(ideal.gens.size());
            for (const auto& g : ideal.gens) relabeled.push_back(relabel(g, assignment));
            std::sort(relabeled.begin(), relabeled.end());
            if (!best || compareGenLists(relabeled, *best) < 0) best = std::move(relabeled);
            return;
        }
        int base = bases[idx];
        const auto& cs = copies[base];
        std::vector<int> perm(cs.size());
        std::iota(perm.begin(), perm.end(), 1);
        do {
            for (size_t k = 0; k < cs.size(); ++k) assignment[VarRef{base, cs[k]}] = perm[k];
            self(self, idx + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    dfs(dfs, 0);

    if (!best) return ideal;  // zero ideal
    return MonomialIdeal{ideal.n, std::move(*best)};
}

}  // namespace polar

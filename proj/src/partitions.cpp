#include "polar/partitions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

namespace polar {

namespace {

constexpr int kMaxN = 12;

Subset fullMask(int n) { return (Subset{1} << n) - 1; }

std::vector<Subset> subsetsOfSize(Subset pool, int size) {
    std::vector<int> bits;
    for (Subset s = pool; s; s &= s - 1) bits.push_back(std::countr_zero(s));
    std::vector<Subset> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == size) {
            Subset m = 0;
            for (int b : pick) m |= Subset{1} << b;
            out.push_back(m);
            return;
        }
        for (size_t k = from; k < bits.size(); ++k) {
            pick.push_back(bits[k]);
            self(self, k + 1);
            pick.pop_back();
        }
    };
    if (size >= 0) rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// partOf[(i-1) << n | mask] = 0-based part index, or -1
struct PartLookup {
    int n;
    std::vector<int8_t> partOf;

    explicit PartLookup(const PartitionFamily& f) : n(f.n) {
        partOf.assign(static_cast<size_t>(f.n) << f.n, -1);
        for (int i = 1; i <= f.n; ++i)
            for (size_t j = 0; j < f.parts[i - 1].size(); ++j)
                for (Subset s : f.parts[i - 1][j])
                    partOf[(static_cast<size_t>(i - 1) << n) | s] = static_cast<int8_t>(j);
    }
    int operator()(int i, Subset s) const { return partOf[(static_cast<size_t>(i - 1) << n) | s]; }
};

bool pairSatisfied(const PartitionFamily& f, const PartLookup& look, int i, Subset sigma,
                   Subset tau) {
    const Subset bitI = Subset{1} << (i - 1);
    const Subset unionMask = sigma | tau;
    for (Subset beta : subsetsOfSize(unionMask, f.d)) {
        bool good = true;
        for (Subset s = beta; s && good; s &= s - 1) {
            Subset bitT = s & -s;
            int partBeta = look(std::countr_zero(bitT) + 1, beta & ~bitT);
            int partSigma = (sigma & bitT) ? look(std::countr_zero(bitT) + 1, (sigma | bitI) & ~bitT) : -2;
            int partTau = (tau & bitT) ? look(std::countr_zero(bitT) + 1, (tau | bitI) & ~bitT) : -2;
            if (partBeta != partSigma && partBeta != partTau) good = false;
        }
        if (good) return true;
    }
    return false;
}

CriterionResult criterionWithLookup(const PartitionFamily& f, const PartLookup& look) {
    for (int i = 1; i <= f.n; ++i) {
        const auto& parts = f.parts[i - 1];
        for (size_t j = 0; j + 1 < parts.size(); ++j)
            for (size_t j2 = j + 1; j2 < parts.size(); ++j2)
                for (Subset sigma : parts[j])
                    for (Subset tau : parts[j2])
                        if (!pairSatisfied(f, look, i, sigma, tau))
                            return CriterionResult{false, i, sigma, tau};
    }
    return CriterionResult{};
}

void checkValid(const PartitionFamily& f) {
    if (auto err = validate_family(f)) throw std::invalid_argument("partition family: " + *err);
}

}  // namespace

std::vector<Subset> sigma_set(int n, int d, int i) {
    return subsetsOfSize(fullMask(n) & ~(Subset{1} << (i - 1)), d - 1);
}

MonomialIdeal squarefree_power_ideal(int n, int d) {
    std::vector<SplitMonomial> gens;
    for (Subset sigma : subsetsOfSize(fullMask(n), d)) {
        std::vector<std::pair<VarRef, int>> exps;
        for (Subset s = sigma; s; s &= s - 1) exps.emplace_back(VarRef{std::countr_zero(s) + 1, 1}, 1);
        gens.emplace_back(std::move(exps));
    }
    return minimalize(n, std::move(gens));
}

std::optional<std::string> validate_family(const PartitionFamily& f) {
    if (f.n < 1 || f.n > kMaxN) return "n out of range";
    if (f.d < 1 || f.d > f.n) return "d out of range";
    if (static_cast<int>(f.parts.size()) != f.n) return "expected one partition per i in [n]";
    for (int i = 1; i <= f.n; ++i) {
        std::vector<Subset> seen;
        for (const auto& part : f.parts[i - 1]) {
            if (part.empty()) return "empty part in Sigma_" + std::to_string(i);
            for (Subset s : part) {
                if (std::popcount(s) != f.d - 1 || (s >> (i - 1) & 1) || (s & ~fullMask(f.n)))
                    return "invalid member of Sigma_" + std::to_string(i);
                seen.push_back(s);
            }
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            return "parts of Sigma_" + std::to_string(i) + " overlap";
        if (seen != sigma_set(f.n, f.d, i))
            return "parts of Sigma_" + std::to_string(i) + " do not cover Sigma_i";
    }
    return std::nullopt;
}

bool same_family(const PartitionFamily& a, const PartitionFamily& b) {
    if (a.n != b.n || a.d != b.d) return false;
    auto canon = [](const PartitionFamily& f) {
        auto parts = f.parts;
        for (auto& sigma : parts) {
            for (auto& part : sigma) std::sort(part.begin(), part.end());
            std::sort(sigma.begin(), sigma.end());
        }
        return parts;
    };
    return canon(a) == canon(b);
}

PartitionFamily trivial_partition(int n, int d) {
    PartitionFamily f{n, d, {}};
    f.parts.resize(n);
    for (int i = 1; i <= n; ++i) f.parts[i - 1] = {sigma_set(n, d, i)};
    return f;
}

PartitionFamily box_partition(int n, int d) {
    PartitionFamily f{n, d, {}};
    f.parts.resize(n);
    for (int i = 1; i <= n; ++i) {
        std::vector<std::vector<Subset>> byPos(d);
        for (Subset sigma : sigma_set(n, d, i)) {
            int below = std::popcount(sigma & ((Subset{1} << (i - 1)) - 1));
            byPos[below].push_back(sigma);
        }
        for (auto& part : byPos)
            if (!part.empty()) f.parts[i - 1].push_back(std::move(part));
    }
    return f;
}

PartitionFamily single_variable_partition(int n, int d, int i) {
    PartitionFamily f = trivial_partition(n, d);
    f.parts[i - 1].clear();
    for (Subset sigma : sigma_set(n, d, i)) f.parts[i - 1].push_back({sigma});
    return f;
}

MonomialIdeal partition_to_ideal(const PartitionFamily& f) {
    checkValid(f);
    PartLookup look(f);
    std::vector<SplitMonomial> gens;
    for (Subset sigma : subsetsOfSize(fullMask(f.n), f.d)) {
        std::vector<std::pair<VarRef, int>> exps;
        for (Subset s = sigma; s; s &= s - 1) {
            int i = std::countr_zero(s) + 1;
            int j = look(i, sigma & ~(s & -s));
            exps.emplace_back(VarRef{i, j + 1}, 1);
        }
        gens.emplace_back(std::move(exps));
    }
    return minimalize(f.n, std::move(gens));
}

PartitionFamily ideal_to_partition(const MonomialIdeal& ideal) {
    const int n = ideal.n;
    if (ideal.gens.empty()) throw std::invalid_argument("ideal_to_partition: zero ideal");
    const int d = ideal.gens[0].degree();

    // every generator square-free with distinct support of size d
    std::vector<Subset> seen;
    std::map<std::pair<int, int>, std::vector<Subset>> groups;  // (i, copy) -> members
    for (const auto& g : ideal.gens) {
        if (!g.isSquareFree() || g.degree() != d)
            throw std::invalid_argument("ideal_to_partition: not equigenerated square-free");
        Subset sigma = 0;
        for (const auto& [v, e] : g.exponents()) {
            if (v.base < 1 || v.base > n) throw std::invalid_argument("ideal_to_partition: base out of range");
            if (sigma >> (v.base - 1) & 1)
                throw std::invalid_argument("ideal_to_partition: repeated base in generator");
            sigma |= Subset{1} << (v.base - 1);
        }
        seen.push_back(sigma);
        for (const auto& [v, e] : g.exponents())
            groups[{v.base, v.copy}].push_back(sigma & ~(Subset{1} << (v.base - 1)));
    }
    std::sort(seen.begin(), seen.end());
    if (seen != subsetsOfSize(fullMask(n), d))
        throw std::invalid_argument("ideal_to_partition: generators are not one per sigma in Gamma_d");

    PartitionFamily f{n, d, {}};
    f.parts.resize(n);
    for (auto& [key, members] : groups) {  // copies visited in increasing order per base
        std::sort(members.begin(), members.end());
        f.parts[key.first - 1].push_back(std::move(members));
    }
    checkValid(f);
    return f;
}

PartitionFamily dual_partition(const PartitionFamily& f) {
    checkValid(f);
    PartitionFamily out{f.n, f.n - f.d + 1, {}};
    out.parts.resize(f.n);
    for (int i = 1; i <= f.n; ++i) {
        Subset ambient = fullMask(f.n) & ~(Subset{1} << (i - 1));
        for (const auto& part : f.parts[i - 1]) {
            std::vector<Subset> comp;
            comp.reserve(part.size());
            for (Subset s : part) comp.push_back(ambient & ~s);
            std::sort(comp.begin(), comp.end());
            out.parts[i - 1].push_back(std::move(comp));
        }
    }
    return out;
}

CriterionResult satisfies_criterion(const PartitionFamily& f) {
    checkValid(f);
    PartLookup look(f);
    return criterionWithLookup(f, look);
}

bool d2_criterion(const PartitionFamily& f) {
    checkValid(f);
    if (f.d != 2) throw std::invalid_argument("d2_criterion: requires d = 2");
    // element-set mask of each part
    std::vector<std::vector<Subset>> partElems(f.n);
    for (int i = 1; i <= f.n; ++i)
        for (const auto& part : f.parts[i - 1]) {
            Subset m = 0;
            for (Subset s : part) m |= s;
            partElems[i - 1].push_back(m);
        }
    for (int i = 1; i <= f.n; ++i)
        for (Subset elems : partElems[i - 1]) {
            Subset need = elems | (Subset{1} << (i - 1));
            for (int j = 1; j <= f.n; ++j) {
                if (j == i || (elems >> (j - 1) & 1)) continue;
                bool found = false;
                for (Subset cand : partElems[j - 1])
                    if ((need & ~cand) == 0) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        }
    return true;
}

bool is_maximal(const PartitionFamily& f) {
    CriterionResult base = satisfies_criterion(f);
    if (!base.ok) throw std::invalid_argument("is_maximal: family fails the criterion");
    for (int i = 1; i <= f.n; ++i) {
        for (size_t j = 0; j < f.parts[i - 1].size(); ++j) {
            const auto& part = f.parts[i - 1][j];
            if (part.size() < 2) continue;
            // bipartitions, first element fixed on side A
            const size_t k = part.size();
            for (uint64_t pick = 1; pick < (uint64_t{1} << (k - 1)); ++pick) {
                std::vector<Subset> a{part[0]}, b;
                for (size_t p = 1; p < k; ++p)
                    ((pick >> (p - 1)) & 1 ? b : a).push_back(part[p]);
                PartitionFamily refined = f;
                refined.parts[i - 1][j] = std::move(a);
                refined.parts[i - 1].push_back(std::move(b));
                PartLookup look(refined);
                if (criterionWithLookup(refined, look).ok) return false;
            }
        }
    }
    return true;
}

namespace {

// all set partitions of {0..k-1} as restricted-growth strings
std::vector<std::vector<int8_t>> setPartitions(int k) {
    std::vector<std::vector<int8_t>> out;
    std::vector<int8_t> a(static_cast<size_t>(k), 0);
    auto rec = [&](auto&& self, int idx, int maxUsed) -> void {
        if (idx == k) {
            out.push_back(a);
            return;
        }
        for (int v = 0; v <= maxUsed + 1; ++v) {
            a[static_cast<size_t>(idx)] = static_cast<int8_t>(v);
            self(self, idx + 1, std::max(maxUsed, v));
        }
    };
    if (k > 0) rec(rec, 0, -1);
    return out;
}

PartitionFamily familyFromChoice(int n, int d, const std::vector<std::vector<Subset>>& sigma,
                                 const std::vector<std::vector<int8_t>>& rgs,
                                 const std::vector<size_t>& choice) {
    PartitionFamily f{n, d, {}};
    f.parts.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& assign = rgs[choice[static_cast<size_t>(i)]];
        int numParts = 0;
        for (int8_t v : assign) numParts = std::max(numParts, v + 1);
        f.parts[static_cast<size_t>(i)].resize(static_cast<size_t>(numParts));
        for (size_t p = 0; p < assign.size(); ++p)
            f.parts[static_cast<size_t>(i)][static_cast<size_t>(assign[p])].push_back(
                sigma[static_cast<size_t>(i)][p]);
    }
    return f;
}

}  // namespace

long long partition_family_count(int n, int d) {
    long long bell = static_cast<long long>(setPartitions(static_cast<int>(sigma_set(n, d, 1).size())).size());
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= bell;
    return total;
}

void for_each_partition_family(int n, int d,
                               const std::function<void(const PartitionFamily&)>& fn) {
    std::vector<std::vector<Subset>> sigma;
    for (int i = 1; i <= n; ++i) sigma.push_back(sigma_set(n, d, i));
    const auto rgs = setPartitions(static_cast<int>(sigma[0].size()));
    std::vector<size_t> choice(static_cast<size_t>(n), 0);
    while (true) {
        fn(familyFromChoice(n, d, sigma, rgs, choice));
        size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < rgs.size()) break;
            choice[pos++] = 0;
        }
        if (pos == choice.size()) return;
    }
}

void for_random_partition_families(int n, int d, long long count, uint64_t seed,
                                   const std::function<void(const PartitionFamily&)>& fn) {
    std::vector<std::vector<Subset>> sigma;
    for (int i = 1; i <= n; ++i) sigma.push_back(sigma_set(n, d, i));
    const auto rgs = setPartitions(static_cast<int>(sigma[0].size()));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, rgs.size() - 1);
    std::vector<size_t> choice(static_cast<size_t>(n));
    for (long long c = 0; c < count; ++c) {
        for (auto& v : choice) v = pick(rng);
        fn(familyFromChoice(n, d, sigma, rgs, choice));
    }
}

}  // namespace polar

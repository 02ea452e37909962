#pragma once

// terse builders for test fixtures

#include <array>
#include <initializer_list>

#include "polar/ideal.hpp"

namespace testutil {

/// mk({{base, copy, exp}, ...})
inline polar::SplitMonomial mk(std::initializer_list<std::array<int, 3>> entries) {
    std::vector<std::pair<polar::VarRef, int>> exps;
    for (const auto& [base, copy, exp] : entries)
        exps.emplace_back(polar::VarRef{base, copy}, exp);
    return polar::SplitMonomial(std::move(exps));
}

inline polar::MonomialIdeal mkIdeal(int n, std::initializer_list<polar::SplitMonomial> gens) {
    return polar::minimalize(n, std::vector<polar::SplitMonomial>(gens));
}

}  // namespace testutil

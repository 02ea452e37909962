#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polar/monomial.hpp"
#include "util.hpp"

using namespace polar;
using testutil::mk;

TEST_CASE("degree, square-freeness, support") {
    auto m = mk({{1, 1, 2}, {2, 1, 1}});  // x1^2 x2
    CHECK(m.degree() == 3);
    CHECK_FALSE(m.isSquareFree());
    CHECK(m.support() == std::vector<VarRef>{{1, 1}, {2, 1}});
    CHECK(mk({{1, 1, 1}, {1, 2, 1}}).isSquareFree());
    CHECK(SplitMonomial::one().isOne());
    CHECK(SplitMonomial::one().degree() == 0);
}

TEST_CASE("divisibility and lcm") {
    auto xy = mk({{1, 1, 1}, {2, 1, 1}});
    auto x2 = mk({{1, 1, 2}});
    auto x2y = mk({{1, 1, 2}, {2, 1, 1}});
    CHECK(xy.divides(x2y));
    CHECK(x2.divides(x2y));
    CHECK_FALSE(x2.divides(xy));
    CHECK(xy.lcm(x2) == x2y);
    CHECK(x2y.dividedBy(xy) == mk({{1, 1, 1}}));
    CHECK(xy.times(x2) == mk({{1, 1, 3}, {2, 1, 1}}));
    // copies of the same base are distinct variables
    auto split = mk({{1, 1, 1}, {1, 2, 1}});
    CHECK_FALSE(x2.divides(split));
    CHECK_FALSE(split.divides(x2));
}

TEST_CASE("canonical order: degree first, then expanded lex") {
    auto x2 = mk({{1, 1, 2}});
    auto xy = mk({{1, 1, 1}, {2, 1, 1}});
    auto y2 = mk({{2, 1, 2}});
    CHECK(x2 < xy);
    CHECK(xy < y2);
    CHECK(mk({{1, 1, 1}}) < x2);  // lower degree first
    CHECK(SplitMonomial::compare(x2, x2) == 0);
    // copy index breaks ties after base
    CHECK(mk({{1, 1, 1}, {1, 2, 1}}) < mk({{1, 1, 1}, {2, 1, 1}}));
}

TEST_CASE("exponent lookup") {
    auto m = mk({{1, 2, 3}, {2, 1, 1}});
    CHECK(m.exponent(VarRef{1, 2}) == 3);
    CHECK(m.exponent(VarRef{1, 1}) == 0);
    CHECK(m.exponent(VarRef{3, 1}) == 0);
}

TEST_CASE("string rendering") {
    CHECK(mk({{1, 1, 1}, {2, 2, 1}}).str() == "x1^(1).x2^(2)");
    CHECK(SplitMonomial::one().str() == "1");
}

TEST_CASE("constructor merges duplicates and drops zeros") {
    SplitMonomial m(std::vector<std::pair<VarRef, int>>{{{1, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 0}});
    CHECK(m == mk({{1, 1, 2}}));
}

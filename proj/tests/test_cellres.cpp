#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polar/cellres.hpp"
#include "polar/trianglegrid.hpp"
#include "util.hpp"

using namespace polar;
using testutil::mk;
using testutil::mkIdeal;

namespace {

// hollow-triangle 1-complex labeled by the generators of (x,y)^2
LabeledCellComplex koszulTriangle() {
    return graph_complex({mk({{1, 1, 2}}), mk({{1, 1, 1}, {2, 1, 1}}), mk({{2, 1, 2}})},
                         {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("graph complex structure") {
    auto complex = koszulTriangle();
    CHECK(face_counts(complex) == std::vector<int>{3, 3});
    CHECK(complex.facesOfDim(1).size() == 3);
    CHECK_FALSE(complex.validate().has_value());
    CHECK(complex.boundarySquaresToZero());
    // edge 0-1 is labeled by lcm(x^2, xy) = x^2 y
    CHECK(complex.faceLabel(3) == mk({{1, 1, 2}, {2, 1, 1}}));
}

TEST_CASE("restriction keeps the divisor-closed part") {
    auto complex = koszulTriangle();
    auto below = restrict_complex(complex, mk({{1, 1, 2}, {2, 1, 1}}));  // x^2 y
    CHECK(face_counts(below) == std::vector<int>{2, 1});
    CHECK(is_acyclic(below) == Acyclicity::Acyclic);
    auto vertexOnly = restrict_complex(complex, mk({{1, 1, 2}}));
    CHECK(face_counts(vertexOnly) == std::vector<int>{1});
    auto nothing = restrict_complex(complex, mk({{3, 1, 1}}));
    CHECK(is_acyclic(nothing) == Acyclicity::Empty);
}

TEST_CASE("acyclicity verdicts") {
    auto point = graph_complex({mk({{1, 1, 1}})}, {});
    CHECK(is_acyclic(point) == Acyclicity::Acyclic);
    auto twoPoints = graph_complex({mk({{1, 1, 1}}), mk({{2, 1, 1}})}, {});
    CHECK(is_acyclic(twoPoints) == Acyclicity::NotAcyclic);
    CHECK(is_acyclic(koszulTriangle()) == Acyclicity::NotAcyclic);  // hollow cycle
    auto path = graph_complex({mk({{1, 1, 1}}), mk({{1, 1, 1}, {2, 1, 1}}), mk({{2, 1, 1}})},
                              {{0, 1}, {1, 2}});
    CHECK(is_acyclic(path) == Acyclicity::Acyclic);
}

TEST_CASE("hollow triangle does not support a resolution, path does") {
    auto ideal = mkIdeal(2, {mk({{1, 1, 2}}), mk({{1, 1, 1}, {2, 1, 1}}), mk({{2, 1, 2}})});
    auto hollow = supports_resolution(koszulTriangle(), ideal);
    CHECK_FALSE(hollow.ok);
    REQUIRE(hollow.offendingDegree.has_value());
    CHECK(*hollow.offendingDegree == mk({{1, 1, 2}, {2, 1, 2}}));

    auto taut = graph_complex({mk({{1, 1, 2}}), mk({{1, 1, 1}, {2, 1, 1}}), mk({{2, 1, 2}})},
                              {{0, 1}, {1, 2}});
    auto result = supports_resolution(taut, ideal);
    CHECK(result.ok);
    CHECK(is_minimal(taut));
}

TEST_CASE("label mismatch is reported") {
    auto taut = graph_complex({mk({{1, 1, 2}}), mk({{1, 1, 1}, {2, 1, 1}})}, {{0, 1}});
    auto ideal = mkIdeal(2, {mk({{1, 1, 2}}), mk({{2, 1, 2}})});
    auto result = supports_resolution(taut, ideal);
    CHECK_FALSE(result.ok);
    CHECK_FALSE(result.error.empty());
}

TEST_CASE("minimality detects equal labels along the boundary") {
    // edge x^2 -- x^2 y where one endpoint label equals the edge label
    auto complex = graph_complex({mk({{1, 1, 2}}), mk({{1, 1, 2}, {2, 1, 1}})}, {{0, 1}});
    CHECK_FALSE(is_minimal(complex));
    auto vertex = graph_complex({mk({{1, 1, 1}})}, {});
    CHECK(is_minimal(vertex));
}

TEST_CASE("full grid complex with a down triangle") {
    auto gamma = gamma_complex(2);
    CHECK(face_counts(gamma) == std::vector<int>{6, 9, 4});
    CHECK_FALSE(gamma.validate().has_value());
    CHECK(gamma.boundarySquaresToZero());
    // the down triangle xy, xz, yz collapses: its label equals each edge label
    CHECK_FALSE(is_minimal(gamma));
    // restricting to xyz keeps the hollow down triangle plus its interior
    auto below = restrict_complex(gamma, mk({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}));
    CHECK(face_counts(below) == std::vector<int>{3, 3, 1});
    CHECK(is_acyclic(below) == Acyclicity::Acyclic);
}

TEST_CASE("validate rejects broken complexes") {
    auto complex = koszulTriangle();
    complex.faces[3].facets[0].first = 7;  // dangling facet
    CHECK(complex.validate().has_value());
    auto wrongSign = koszulTriangle();
    wrongSign.faces[3].facets[0].second = 1;  // both edge signs positive
    CHECK_FALSE(wrongSign.boundarySquaresToZero());
}

TEST_CASE("restriction rejects complexes not closed under faces") {
    // an edge that omits one endpoint from its vertex list: the edge
    // survives a restriction that drops the omitted endpoint
    LabeledCellComplex complex;
    complex.vertexLabels = {mk({{1, 1, 1}}), mk({{2, 1, 1}})};
    complex.faces.push_back({0, {}, {0}});
    complex.faces.push_back({0, {}, {1}});
    complex.faces.push_back({1, {{0, -1}, {1, 1}}, {0}});
    CHECK_THROWS(restrict_complex(complex, mk({{1, 1, 1}})));
}

#pragma once

#include <array>
#include <string>
#include <vector>

#include "polar/cellres.hpp"
#include "polar/ideal.hpp"

namespace polar {

/// Which edge of a down triangle gets removed: X removes (m·xy, m·xz),
/// Y removes (m·xy, m·yz), Z removes (m·xz, m·yz).
enum class TriangleType { X, Y, Z };

/// Exponent triples (a, b, c) of x^a y^b z^c with a+b+c = deg, in
/// graded-lex order with x > y > z.  deg = d gives the grid vertices,
/// deg = d-2 the down triangles.
std::vector<std::array<int, 3>> exponent_triples(int deg);

/// One TriangleType per down triangle of the degree-d grid, listed in
/// exponent_triples(d - 2) order.
struct TriangleChoice {
    int d = 2;
    std::vector<TriangleType> choices;

    TriangleType at(int a, int b, int c) const;
    bool valid() const;
};

/// The full triangular grid on the generators of (x,y,z)^d: one vertex
/// per monomial, edges between linear-syzygy pairs, and every up and
/// down triangle as a 2-cell.
LabeledCellComplex gamma_complex(int d);

/// The square-free polarization of (x,y,z)^d determined by the choice,
/// built by iterating maximal chains row by row for each of the three
/// variables.
MonomialIdeal construct_polarization(const TriangleChoice& choice);

/// Drop each down triangle's chosen edge from the grid and re-trace the
/// bounded planar regions as 2-cells; vertices carry the generators of
/// construct_polarization(choice).
LabeledCellComplex build_delta_complex(const TriangleChoice& choice);

/// SVG picture of the grid with removed edges omitted and vertices
/// annotated by their polarized generators.
std::string render_svg(const TriangleChoice& choice);

}  // namespace polar

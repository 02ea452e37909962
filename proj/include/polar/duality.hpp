#pragma once

#include "polar/ideal.hpp"

namespace polar {

/// Alexander dual of a square-free monomial ideal: the ideal generated by
/// the inclusion-minimal transversals (hitting sets) of the generator
/// supports.  The zero ideal dualizes to the zero ideal; the unit ideal
/// is rejected, as are non-square-free generators.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

}  // namespace polar

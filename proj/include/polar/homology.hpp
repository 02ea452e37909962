#pragma once

#include <cstdint>
#include <vector>

namespace polar {

/// Rank over the rationals, computed exactly (integer elimination with an
/// arbitrary-precision fallback when 64-bit entries would overflow).
int rank_exact(const std::vector<std::vector<long long>>& matrix);

/// Reduced simplicial homology ranks of a complex given by its faces as
/// vertex bitmasks.  The face list must be closed under subsets and must
/// contain the empty face (mask 0) when nonempty.  Entry [k+1] of the
/// result is dim H~_k over Q, for k = -1 .. top dimension.
std::vector<int> reduced_homology(const std::vector<uint64_t>& faces);

}  // namespace polar

#pragma once

#include <vector>

#include "hnum/cover.hpp"
#include "hnum/partition.hpp"

namespace hnum {

// Constructive non-vanishing witness: requires
// l(lambda_o) = l(mu_o) != 0 and l(lambda_e) = l(mu_e) = 0 in the tail
// decompositions.  Strings for the distinct odd parts, symmetric-fork tails
// for the repeated parts, bridges between consecutive strings, and g circle
// pairs on the last string.  The result is universally enhanced and valid
// for (g, lambda, mu).
TropicalCover build_nonvanishing_cover(int g, const Partition& lambda, const Partition& mu);

// The glued block family: at least floor((m-1)/3)! pairwise distinct
// universally enhanced covers of type (0, 1^m, 1^m), one per ordering of the
// chain of degree-4/5/6 blocks.  m > 3.
std::vector<TropicalCover> build_block_family(int m);

} // namespace hnum

#pragma once

#include <vector>

#include "hnum/cover.hpp"
#include "hnum/partition.hpp"
#include "hnum/rational.hpp"
#include "hnum/signs.hpp"

namespace hnum {

// All isomorphism classes of enhanced real tropical covers of type
// (g, lambda, mu, x) whose pair signs reproduce the splitting, sorted by
// canonical key.  Left-to-right sweep: one signed pair template per branch
// point, consuming and producing active edge descriptors; equal descriptors
// from the same source are interchangeable, so one representative is chosen
// and the sweep yields classes directly.
std::vector<CoverClass> enumerate_enhanced_covers(int g, const Partition& lambda,
                                                  const Partition& mu,
                                                  const SignSplitting& splitting,
                                                  int threads = 1);

// Sum of enhanced multiplicities over those classes (the tropical side of
// the correspondence).
uint128 real_hurwitz_tropical(int g, const Partition& lambda, const Partition& mu,
                              const SignSplitting& splitting, int threads = 1);

// Same sweep restricted to the uncoloured pair templates with no even inner
// edge allowed except bridges: produced even edges and even symmetric pairs
// must run to the right boundary.  Classes carry dotting but no colours;
// multiplicity is the general formula (colour-free).
std::vector<CoverClass> enumerate_universal_covers(int g, const Partition& lambda,
                                                   const Partition& mu, int threads = 1);

} // namespace hnum

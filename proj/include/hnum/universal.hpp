#pragma once

#include <vector>

#include "hnum/cover.hpp"
#include "hnum/partition.hpp"
#include "hnum/rational.hpp"
#include "hnum/signs.hpp"
#include "hnum/templates.hpp"

namespace hnum {

// Both conditions of the universally-enhanced test: every pair matches one
// of the uncoloured pair templates (up to reflection), and the only even
// inner edges are bridge edges.  The cover is assumed to validate.
bool is_universally_enhanced(const TropicalCover& c);

// The dotted set of any real structure on a universally enhanced cover: the
// symmetric units of its shape i-iv pairs.  Splitting-independent.
std::vector<CFElem> universal_dotting(const TropicalCover& c);

// The unique colouring reproducing the given splitting (one sign per pair).
// Throws DegenerateError on non-universal input.
RealStructure canonical_colouring(const TropicalCover& c, const SignSplitting& splitting);

// 2^|C & I_rho| * prod of dotted circle weights for r > 1; for r = 1 the
// general enhanced multiplicity with the canonical dotting.
uint128 universal_mult(const TropicalCover& c);

// Isomorphism classes of universally enhanced covers of type (g,lambda,mu),
// sorted by (uncoloured) canonical key, multiplicity = universal_mult.
std::vector<CoverClass> enumerate_universal(int g, const Partition& lambda, const Partition& mu,
                                            int threads = 1);

// E_g(lambda, mu): the splitting-independent lower bound.
uint128 enhanced_number(int g, const Partition& lambda, const Partition& mu, int threads = 1);

} // namespace hnum

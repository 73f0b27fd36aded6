#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hnum/partition.hpp"
#include "hnum/perm.hpp"
#include "hnum/rational.hpp"
#include "hnum/signs.hpp"

namespace hnum {

// r = (l(lambda)+l(mu)+2g-2)/2; throws DegenerateError on parity mismatch or
// r <= 0 / non-integer.
int branch_pair_count(int g, const Partition& lambda, const Partition& mu);

struct RealTuple {
    Perm gamma;
    Perm sigma1;
    std::vector<Perm> taus;
    Perm sigma2;
};

struct OracleOptions {
    int threads = 1;
    bool slow_reference = false; // unpruned full-sequence filter
    // When set, every accepted tuple is reported (forces single thread).
    std::function<void(const RealTuple&)> visitor;
};

// |F^R(g,lambda,mu;S(s))|: tuples (gamma, sigma1, tau_1..tau_r, sigma2) with
// product id, prescribed cycle types, transitive action, and the involution
// chain gamma_i (gamma_1 = gamma or gamma o sigma1 by the first sign;
// gamma_{j+1} multiplies by the running partial product on a sign change).
uint128 count_real_tuples(int g, const Partition& lambda, const Partition& mu,
                          const SignSplitting& signs, const OracleOptions& opts = {});

HurwitzCount real_hurwitz_oracle(int g, const Partition& lambda, const Partition& mu,
                                 const SignSplitting& signs, const OracleOptions& opts = {});

// Same count without the reality conditions (no gamma).
uint128 count_complex_tuples(int g, const Partition& lambda, const Partition& mu,
                             const OracleOptions& opts = {});

HurwitzCount complex_hurwitz_oracle(int g, const Partition& lambda, const Partition& mu,
                                    const OracleOptions& opts = {});

// Minimal transitive factorizations of one fixed d-cycle into 3-cycles,
// r = (d-1)/2 factors.  d must be odd, >= 3.
uint128 count_fixed_target_factorizations(int d);

// The unique decomposition tau = t2 * t1 into transpositions such that
// t1 * sigma is still reversed by gamma (sign +) or by gamma o sigma
// (sign -).  Throws InvariantError ("lemma violation") unless exactly one of
// the three candidate splittings passes.
std::pair<Perm, Perm> real_decompose_3cycle(const Perm& sigma, const Perm& gamma,
                                            const Perm& tau, int sign);

enum class CycleKind : uint8_t { OddReal, EvenReal0Fix, EvenReal2Fix, ConjugatedPair };

const char* cycle_kind_name(CycleKind k);

// Classify one cycle of pi with respect to an involution reversing pi.
// For ConjugatedPair the reported size is the length of one member.
CycleKind classify_cycle(const Perm& pi, const Perm& gamma, const std::vector<int>& cycle);

struct TransitionDescriptor {
    std::vector<std::pair<CycleKind, int>> incoming; // sorted multiset of (kind, size)
    std::vector<std::pair<CycleKind, int>> outgoing;
    int sign = 1;

    bool operator<(const TransitionDescriptor& o) const;
    bool operator==(const TransitionDescriptor& o) const;
    std::string str() const;
};

// For every admissible 3-cycle tau (reversed chain condition for the given
// sign), classify the cycles of sigma touched by supp(tau) and the cycles of
// tau*sigma produced, and tally per descriptor.  The involution used is gamma
// for sign +, gamma o sigma for sign -.
std::map<TransitionDescriptor, long> local_multiplicity_census(const Perm& sigma,
                                                               const Perm& gamma, int sign);

} // namespace hnum

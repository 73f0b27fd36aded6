#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hnum/errors.hpp"
#include "hnum/partition.hpp"

namespace hnum {

// Hard compile-time degree bound; all counters stay inside 128 bits below it.
inline constexpr int kMaxDegree = 16;

// Runtime safety cap (defaults to kMaxDegree, may be lowered via HNUM_MAX_D).
int degree_cap();
void set_degree_cap(int cap);

// Permutation of {1,...,d}.  Points are stored 0-based; all text I/O is
// 1-based to line up with cycle notation.
//
// Composition is RIGHT-TO-LEFT throughout this code base:
//     (p * q)(x) = p(q(x)),
// i.e. q acts first.  This matches products written sigma2 o tau_r o ... o
// tau_1 o sigma1, which are read right to left.
class Perm {
public:
    Perm() : d_(0) {}
    explicit Perm(int d); // identity

    static Perm from_images(const std::vector<int>& images0); // 0-based images
    static Perm from_cycles(int d, const std::vector<std::vector<int>>& cycles1); // 1-based entries
    // Accepts "(1 2 3)(4 5)", "(1,2,3)", "[2,3,1]" (one-line, 1-based), "id".
    static Perm parse(const std::string& text, int d);

    int degree() const { return d_; }
    int operator()(int x) const { return img_[x]; }

    Perm operator*(const Perm& rhs) const; // (*this) after rhs
    Perm inverse() const;

    bool is_identity() const;
    bool is_involution() const; // squares to id (id itself included)

    Partition cycle_type() const;
    std::vector<std::vector<int>> cycles() const; // 0-based, each led by min, sorted by leader

    std::string cycle_string() const;   // "(1 2 3)(4 5)", "id" for identity
    std::string one_line_string() const; // "[2,3,1,5,4]"

    bool operator==(const Perm& o) const { return d_ == o.d_ && img_ == o.img_; }
    // Lexicographic on the one-line form.
    std::strong_ordering operator<=>(const Perm& o) const;

    size_t hash() const;

private:
    uint8_t d_;
    std::array<uint8_t, kMaxDegree> img_{};
};

inline Perm compose(const Perm& p, const Perm& q) { return p * q; }

// g * p * g^-1; preserves cycle type.
Perm conjugate(const Perm& g, const Perm& p);

// True iff the orbit of every point under <gens> is all of {1,...,d}.
// Orbit closure on points only; the group is never materialised.
bool is_transitive(const std::vector<Perm>& gens, int d);

// All involutions gamma (gamma^2 = id, id included) with gamma*sigma*gamma =
// sigma^-1, in lexicographic one-line order.
std::vector<Perm> reversing_involutions(const Perm& sigma);

// All permutations of the given cycle type, lexicographic one-line order.
std::vector<Perm> permutations_of_type(int d, const Partition& type);
void for_each_permutation_of_type(int d, const Partition& type,
                                  const std::function<void(const Perm&)>& fn);

// The 2*C(d,3) three-cycles of S_d, lexicographic one-line order.
std::vector<Perm> three_cycles(int d);

} // namespace hnum

template <>
struct std::hash<hnum::Perm> {
    size_t operator()(const hnum::Perm& p) const { return p.hash(); }
};

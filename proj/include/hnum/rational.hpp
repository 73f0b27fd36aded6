#pragma once

#include <cstdint>
#include <string>

#include "hnum/errors.hpp"

namespace hnum {

using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 checked_add(uint128 a, uint128 b) {
    uint128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("128-bit counter overflow (addition)");
    return r;
}

inline uint128 checked_mul(uint128 a, uint128 b) {
    uint128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("128-bit counter overflow (multiplication)");
    return r;
}

std::string to_string_u128(uint128 v);
std::string to_string_i128(int128 v);

// Exact rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() = default;
    Rational(int128 num, int128 den);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    // Throws InvariantError unless den == 1.
    int128 as_integer() const;

    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    int128 num_ = 0;
    int128 den_ = 1;
};

// Count of factorization tuples together with the d! normalisation.
struct HurwitzCount {
    uint128 raw = 0;       // |F| (tuple count)
    uint128 degree_factorial = 1;
    Rational value;        // raw / d! in lowest terms

    static HurwitzCount make(uint128 raw, int degree);
};

uint128 factorial_u128(int n);

} // namespace hnum

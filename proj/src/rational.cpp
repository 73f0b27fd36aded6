#include "hnum/rational.hpp"

namespace hnum {

std::string to_string_u128(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + (int)(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

std::string to_string_i128(int128 v) {
    if (v < 0) return "-" + to_string_u128((uint128)(-v));
    return to_string_u128((uint128)v);
}

namespace {
int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
} // namespace

Rational::Rational(int128 num, int128 den) : num_(num), den_(den) {
    if (den_ == 0) throw InvariantError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    int128 g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

int128 Rational::as_integer() const {
    if (den_ != 1) throw InvariantError("rational " + str() + " is not an integer");
    return num_;
}

std::string Rational::str() const {
    if (den_ == 1) return to_string_i128(num_);
    return to_string_i128(num_) + "/" + to_string_i128(den_);
}

uint128 factorial_u128(int n) {
    uint128 f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, (uint128)i);
    return f;
}

HurwitzCount HurwitzCount::make(uint128 raw, int degree) {
    HurwitzCount h;
    h.raw = raw;
    h.degree_factorial = factorial_u128(degree);
    h.value = Rational((int128)raw, (int128)h.degree_factorial);
    return h;
}

} // namespace hnum

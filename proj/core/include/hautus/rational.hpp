#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hautus {

// Exact arbitrary-precision arithmetic. cpp_rational keeps every value in
// lowest terms with a positive denominator, which is exactly the invariant
// the coefficient ring needs; do not replace it with a fixed-width type.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return numerator(q); }
inline Integer denominator_of(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

inline Integer integer_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer integer_lcm(const Integer& a, const Integer& b) {
    return boost::multiprecision::lcm(a, b);
}

// "3/2", "-7", "0" — the same syntax the polynomial grammar accepts.
inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

} // namespace hautus

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "kummer/errors.hpp"

namespace kummer {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always stored in lowest terms with positive
// denominator. The coefficient field for every series and weight in the
// engine; no floating point appears anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Narrows an integral Rational to Integer.
inline Integer to_integer(const Rational& q) {
    if (!is_integer(q))
        throw consistency_error("to_integer: value " + q.str() + " is not an integer");
    return numerator(q);
}

// base^exponent as a materialized value; boost's pow alone yields an
// expression template that cannot mix into rational arithmetic.
inline Integer integer_pow(const Integer& base, unsigned exponent) {
    Integer result = boost::multiprecision::pow(base, exponent);
    return result;
}

inline Rational rat_pow(Rational base, unsigned exponent) {
    Rational result = 1;
    while (exponent != 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent != 0) base *= base;
    }
    return result;
}

} // namespace kummer

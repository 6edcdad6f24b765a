#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace schur {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact factorial.
inline BigInt factorial(long m) {
    if (m < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt r = 1;
    for (long s = 2; s <= m; ++s) r *= s;
    return r;
}

/// Binomial coefficient binom(c, m) for integer c of either sign and m >= 0,
/// defined by the falling-factorial formula c(c-1)...(c-m+1)/m!.
/// In particular binom(-1, 2) = 1 and binom(c, 0) = 1 for every c.
inline BigInt binomial(const BigInt& c, long m) {
    if (m < 0) return 0;
    if (m == 0) return 1;
    if (c < 0) {
        // binom(c, m) = (-1)^m binom(m - c - 1, m)
        BigInt flipped = binomial(BigInt(m - c - 1), m);
        return (m % 2 == 0) ? flipped : -flipped;
    }
    if (c < m) return 0;
    BigInt num = 1;
    for (long s = 0; s < m; ++s) num *= (c - s);
    return num / factorial(m);
}

inline BigInt binomial(long c, long m) { return binomial(BigInt(c), m); }

/// True when a rational is an integer.
inline bool is_integer(const BigRational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

}  // namespace schur

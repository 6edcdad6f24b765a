#pragma once

#include <stdexcept>

#include "schur/laurent.hpp"
#include "schur/numeric.hpp"

namespace schur {

/// Raised when a quantity expected to be a Laurent polynomial fails the
/// exact-division test that defines it.
struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The quantum integer [m] = (v^m - v^{-m})/(v - v^{-1}) for m of either
/// sign, as an element of Z[v, v^-1].  [0] = 0, [-m] = -[m], and [m]
/// specializes to m at v = 1.
inline LaurentPolynomial quantum_integer(long m) {
    LaurentPolynomial r;
    if (m == 0) return r;
    if (m < 0) return -quantum_integer(-m);
    // [m] = v^{m-1} + v^{m-3} + ... + v^{1-m}
    for (long e = m - 1; e >= 1 - m; e -= 2) r += LaurentPolynomial::v_power(static_cast<int>(e));
    return r;
}

/// The quantum factorial [m]! = [m][m-1]...[1].
inline LaurentPolynomial quantum_factorial(long m) {
    if (m < 0) throw std::invalid_argument("quantum_factorial of negative argument");
    LaurentPolynomial r = LaurentPolynomial::one();
    for (long s = 2; s <= m; ++s) r *= quantum_integer(s);
    return r;
}

/// The Gaussian binomial [c choose m] = [c][c-1]...[c-m+1]/[m]! for integer
/// c of either sign and m >= 0.  The division by [m]! is performed exactly
/// in the Laurent ring; a nonzero remainder would indicate corrupted inputs
/// and raises InexactDivision.
inline LaurentPolynomial quantum_binomial(long c, long m) {
    if (m < 0) return LaurentPolynomial();
    if (m == 0) return LaurentPolynomial::one();
    LaurentPolynomial num = LaurentPolynomial::one();
    for (long s = 0; s < m; ++s) num *= quantum_integer(c - s);
    auto q = num.divided_by(quantum_factorial(m));
    if (!q) throw InexactDivision("quantum_binomial: [m]! does not divide the falling product");
    return *q;
}

/// Evaluation at v = 1 (the coefficient sum), the specialization map from
/// the quantum coefficient ring onto the integers.
inline BigInt specialize_v1(const LaurentPolynomial& p) { return p.evaluate_at_one(); }

}  // namespace schur

#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "schur/numeric.hpp"

namespace schur {

/// A Laurent polynomial in one variable v with arbitrary-precision integer
/// coefficients.  The zero polynomial is the empty map; all stored
/// coefficients are nonzero.
///
/// This is the coefficient ring for the integral form of the quantized
/// algebras: quantum integers, quantum factorials and Gaussian binomials all
/// live here, and "integral" for a quantum scalar means membership in this
/// ring.
class LaurentPolynomial {
public:
    using Coeffs = std::map<int, BigInt>;  // exponent -> coefficient

    LaurentPolynomial() = default;

    explicit LaurentPolynomial(const BigInt& c) {
        if (c != 0) coeffs_[0] = c;
    }

    explicit LaurentPolynomial(long c) : LaurentPolynomial(BigInt(c)) {}

    LaurentPolynomial(const BigInt& c, int exponent) {
        if (c != 0) coeffs_[exponent] = c;
    }

    /// The monomial v^e.
    static LaurentPolynomial v_power(int e) { return LaurentPolynomial(BigInt(1), e); }

    static LaurentPolynomial one() { return LaurentPolynomial(BigInt(1)); }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
    }

    /// True when the polynomial is a single term c * v^e.
    bool is_monomial() const { return coeffs_.size() == 1; }

    const Coeffs& coefficients() const { return coeffs_; }

    BigInt coefficient(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    int min_exponent() const {
        if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
        return coeffs_.begin()->first;
    }

    int max_exponent() const {
        if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& o) {
        *this = *this * o;
        return *this;
    }

    /// Multiply by the unit c * v^e.
    LaurentPolynomial shifted(int e, const BigInt& c = BigInt(1)) const {
        LaurentPolynomial r;
        if (c == 0) return r;
        for (const auto& [ex, co] : coeffs_) r.coeffs_[ex + e] = co * c;
        return r;
    }

    bool operator==(const LaurentPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    /// The bar involution v -> v^{-1}.
    LaurentPolynomial bar() const {
        LaurentPolynomial r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    /// Evaluation at v = 1, i.e. the coefficient sum.
    BigInt evaluate_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    /// Greatest common divisor of the coefficients (nonnegative); 0 for the
    /// zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& [e, c] : coeffs_) g = boost::multiprecision::gcd(g, c);
        return g < 0 ? BigInt(-g) : g;
    }

    /// Attempts the exact division (*this) / den in the Laurent ring.
    /// Returns std::nullopt when the division leaves a remainder.
    std::optional<LaurentPolynomial> divided_by(const LaurentPolynomial& den) const {
        if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
        if (is_zero()) return LaurentPolynomial();
        // Anchor both operands at minimum exponent 0 so ordinary polynomial
        // division applies, then undo the shift on the quotient.
        const int na = min_exponent();
        const int nb = den.min_exponent();
        LaurentPolynomial rem = shifted(-na);
        const LaurentPolynomial b = den.shifted(-nb);
        const int dtop = b.max_exponent();
        const BigInt dlead = b.coeffs_.rbegin()->second;
        LaurentPolynomial quot;
        while (!rem.is_zero()) {
            const int rtop = rem.max_exponent();
            if (rtop < dtop) return std::nullopt;
            const BigInt rlead = rem.coeffs_.rbegin()->second;
            if (rlead % dlead != 0) return std::nullopt;
            BigInt q = rlead / dlead;
            int shift = rtop - dtop;
            quot.add_term(shift, q);
            rem -= b.shifted(shift, q);
        }
        return quot.shifted(na - nb);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        // Highest powers first reads most naturally.
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            BigInt c = it->second;
            int e = it->first;
            if (first) {
                if (c < 0) {
                    out << "-";
                    c = -c;
                }
            } else {
                out << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            if (e == 0) {
                out << c;
            } else {
                if (c != 1) out << c << "*";
                out << "v";
                if (e != 1) out << "^" << e;
            }
            first = false;
        }
        return out.str();
    }

private:
    void add_term(int e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Coeffs coeffs_;
};

}  // namespace schur

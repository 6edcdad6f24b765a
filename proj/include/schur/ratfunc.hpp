#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur/laurent.hpp"
#include "schur/numeric.hpp"

namespace schur {

namespace detail {

/// Polynomial remainder over the rationals.  Vectors are dense coefficient
/// lists, index = exponent.
inline std::vector<BigRational> poly_remainder(std::vector<BigRational> a,
                                               const std::vector<BigRational>& b) {
    auto degree = [](const std::vector<BigRational>& p) -> long {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[static_cast<size_t>(i)] != 0) return i;
        return -1;
    };
    const long db = degree(b);
    if (db < 0) throw std::invalid_argument("poly_remainder by zero");
    for (long da = degree(a); da >= db; da = degree(a)) {
        BigRational factor = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
        for (long i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] -= factor * b[static_cast<size_t>(i)];
        a[static_cast<size_t>(da)] = 0;  // guard against rounding-free residue
    }
    return a;
}

inline std::vector<BigRational> to_dense(const LaurentPolynomial& p) {
    // Shift so the lowest exponent sits at index 0.
    const int lo = p.min_exponent();
    std::vector<BigRational> out(static_cast<size_t>(p.max_exponent() - lo + 1));
    for (const auto& [e, c] : p.coefficients()) out[static_cast<size_t>(e - lo)] = BigRational(c);
    return out;
}

inline LaurentPolynomial from_dense_primitive(const std::vector<BigRational>& p) {
    // Clear denominators, divide by integer content, anchor min exponent at 0
    // with a positive lowest coefficient.  The result is the canonical
    // associate of p.
    BigInt denom_lcm = 1;
    for (const auto& c : p)
        if (c != 0)
            denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(c));
    LaurentPolynomial r;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        BigInt num = boost::multiprecision::numerator(p[i]) *
                     (denom_lcm / boost::multiprecision::denominator(p[i]));
        r += LaurentPolynomial(num, static_cast<int>(i));
    }
    if (r.is_zero()) return r;
    BigInt cont = r.content();
    r = *r.divided_by(LaurentPolynomial(cont));
    r = r.shifted(-r.min_exponent());
    if (r.coefficient(0) < 0) r = -r;
    return r;
}

/// Gcd of two Laurent polynomials, canonicalized to have minimum exponent 0
/// and positive lowest coefficient.  Units (and zero inputs) are handled so
/// that gcd(p, 0) = associate of p.
inline LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : from_dense_primitive(to_dense(b));
    if (b.is_zero()) return from_dense_primitive(to_dense(a));
    std::vector<BigRational> x = to_dense(a);
    std::vector<BigRational> y = to_dense(b);
    auto is_zero = [](const std::vector<BigRational>& p) {
        for (const auto& c : p)
            if (c != 0) return false;
        return true;
    };
    while (!is_zero(y)) {
        std::vector<BigRational> r = poly_remainder(x, y);
        x = y;
        y = r;
    }
    return from_dense_primitive(x);
}

}  // namespace detail

/// An element of Q(v) held as a reduced fraction of integer Laurent
/// polynomials.  Canonical form: gcd(num, den) is a unit, the denominator has
/// minimum exponent 0 and positive lowest coefficient, and the integer
/// contents of numerator and denominator are coprime.  Equality is therefore
/// structural.  An element is integral (lies in Z[v, v^-1]) exactly when the
/// denominator is 1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(LaurentPolynomial::one()) {}

    RationalFunction(const LaurentPolynomial& num) : num_(num), den_(LaurentPolynomial::one()) {
        normalize();
    }

    RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den)
        : num_(num), den_(den) {
        normalize();
    }

    explicit RationalFunction(long c) : RationalFunction(LaurentPolynomial(c)) {}
    explicit RationalFunction(const BigInt& c) : RationalFunction(LaurentPolynomial(c)) {}

    static RationalFunction v_power(int e) {
        return RationalFunction(LaurentPolynomial::v_power(e));
    }

    static RationalFunction one() { return RationalFunction(LaurentPolynomial::one()); }

    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }

    /// True when the element lies in the Laurent subring Z[v, v^-1].
    bool is_integral() const { return den_.is_one(); }

    /// The Laurent polynomial value, when integral.
    std::optional<LaurentPolynomial> as_laurent() const {
        if (!is_integral()) return std::nullopt;
        return num_;
    }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
        if (a.is_zero()) return RationalFunction();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero()) throw std::invalid_argument("inverse of zero");
        return RationalFunction(den_, num_);
    }

    RationalFunction pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        RationalFunction r = one();
        RationalFunction base = *this;
        for (int i = 0; i < k; ++i) r *= base;
        return r;
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Bar involution v -> v^{-1}, extended from the Laurent ring.
    RationalFunction bar() const { return RationalFunction(num_.bar(), den_.bar()); }

    /// Evaluation at v = 1; nullopt when the denominator vanishes there
    /// (cannot happen for canonical-form elements arising from integral
    /// quantities, since those have denominator 1).
    std::optional<BigRational> evaluate_at_one() const {
        BigInt d = den_.evaluate_at_one();
        if (d == 0) return std::nullopt;
        return BigRational(num_.evaluate_at_one(), d);
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::invalid_argument("zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPolynomial::one();
            return;
        }
        LaurentPolynomial g = detail::laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *num_.divided_by(g);
            den_ = *den_.divided_by(g);
        }
        const int shift = -den_.min_exponent();
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
        if (den_.coefficient(0) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
        if (c > 1) {
            num_ = *num_.divided_by(LaurentPolynomial(c));
            den_ = *den_.divided_by(LaurentPolynomial(c));
        }
    }

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

}  // namespace schur

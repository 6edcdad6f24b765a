#pragma once

#include <optional>
#include <string>

#include "schur/numeric.hpp"
#include "schur/qint.hpp"
#include "schur/ratfunc.hpp"

namespace schur {

enum class RingTag { Classical, Quantum };

inline const char* ring_name(RingTag t) {
    return t == RingTag::Classical ? "classical" : "quantum";
}

/// Scalar operations for the classical case: exact rationals, with v acting
/// as 1 so that the same generic code drives both specializations.
struct ClassicalRing {
    using Scalar = BigRational;
    static constexpr RingTag tag = RingTag::Classical;

    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }
    static Scalar from_int(const BigInt& c) { return Scalar(c); }
    static Scalar from_long(long c) { return Scalar(c); }
    static Scalar v_power(int) { return Scalar(1); }
    static Scalar integer(long m) { return Scalar(m); }
    static Scalar factorial_scalar(long m) { return Scalar(factorial(m)); }
    static Scalar binomial_scalar(long c, long m) { return Scalar(binomial(c, m)); }
    static bool is_integral(const Scalar& s) { return is_integer(s); }
    static Scalar bar(const Scalar& s) { return s; }
    static std::string to_string(const Scalar& s) { return s.str(); }
};

/// Scalar operations for the quantum case: the field Q(v), with integrality
/// meaning membership in Z[v, v^-1].
struct QuantumRing {
    using Scalar = RationalFunction;
    static constexpr RingTag tag = RingTag::Quantum;

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar::one(); }
    static Scalar from_int(const BigInt& c) { return Scalar(c); }
    static Scalar from_long(long c) { return Scalar(c); }
    static Scalar v_power(int e) { return Scalar::v_power(e); }
    static Scalar integer(long m) { return Scalar(quantum_integer(m)); }
    static Scalar factorial_scalar(long m) { return Scalar(quantum_factorial(m)); }
    static Scalar binomial_scalar(long c, long m) { return Scalar(quantum_binomial(c, m)); }
    static bool is_integral(const Scalar& s) { return s.is_integral(); }
    static Scalar bar(const Scalar& s) { return s.bar(); }
    static std::string to_string(const Scalar& s) { return s.to_string(); }
};

/// v = 1 specialization on scalars; nullopt if the denominator vanishes
/// at 1 (never the case for integral elements).
inline std::optional<BigRational> specialize_scalar(const RationalFunction& s) {
    return s.evaluate_at_one();
}

}  // namespace schur

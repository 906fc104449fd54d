#pragma once
// parity.hpp - sign bookkeeping for the Jacobi symbol.
//
// All three epsilon helpers evaluate classic (-1)^e exponents from the low
// bits of their operands only; none of them ever squares or multiplies a
// full-size integer.

#include <string>

#include "binjacobi/errors.hpp"
#include "binjacobi/nat.hpp"

namespace binjacobi {

// Exponent of a (-1)^s sign accumulator; only the parity of s matters.
class SignParity {
public:
    constexpr SignParity() = default;
    constexpr explicit SignParity(unsigned long bit) : bit_(static_cast<unsigned>(bit & 1)) {}

    constexpr unsigned bit() const { return bit_; }
    constexpr int sign() const { return bit_ ? -1 : 1; }

    // Parity of k copies of this term.
    constexpr SignParity times(unsigned long k) const { return SignParity(bit_ & k); }

    constexpr SignParity& operator^=(SignParity o) {
        bit_ ^= o.bit_;
        return *this;
    }
    friend constexpr SignParity operator^(SignParity a, SignParity b) {
        return a ^= b;
    }
    friend constexpr bool operator==(SignParity, SignParity) = default;

private:
    unsigned bit_ = 0;
};

// The symbol (b|a): -1, 0, or +1. Zero exactly when gcd(a, b) != 1.
class JacobiValue {
public:
    constexpr explicit JacobiValue(int v) : v_(v) {
        if (v < -1 || v > 1) throw invalid_input("JacobiValue: must be -1, 0 or 1");
    }

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    constexpr JacobiValue negated_if(SignParity s) const {
        return s.bit() ? JacobiValue(-v_) : *this;
    }

    friend constexpr JacobiValue operator*(JacobiValue a, JacobiValue b) {
        return JacobiValue(a.v_ * b.v_);
    }
    friend constexpr bool operator==(JacobiValue, JacobiValue) = default;

private:
    int v_;
};

namespace detail {
inline void require_odd(const Nat& x, const char* who) {
    if (!is_odd(x)) throw invalid_input(std::string(who) + ": operand must be odd");
}
}  // namespace detail

// (a^2 - 1)/8 mod 2 for odd a: the exponent of (2|a). 1 iff a = 3, 5 (mod 8).
inline SignParity eps_square(const Nat& a) {
    detail::require_odd(a, "eps_square");
    const unsigned long a8 = mod_pow2_ul(a, 3);
    return SignParity(a8 == 3 || a8 == 5);
}

// (a-1)(b-1)/4 mod 2 for odd a, b: the reciprocity exponent.
// 1 iff a = b = 3 (mod 4).
inline SignParity eps_recip(const Nat& a, const Nat& b) {
    detail::require_odd(a, "eps_recip");
    detail::require_odd(b, "eps_recip");
    return SignParity(mod_pow2_ul(a, 2) == 3 && mod_pow2_ul(b, 2) == 3);
}

// (a-1)/2 mod 2 for odd a: the exponent of (-1|a). 1 iff a = 3 (mod 4).
inline SignParity eps_neg(const Nat& a) {
    detail::require_odd(a, "eps_neg");
    return SignParity(mod_pow2_ul(a, 2) == 3);
}

}  // namespace binjacobi

#pragma once
// nat.hpp - arbitrary-precision operands and 2-adic utilities.
//
// Nat is GMP's mpz_class: the algorithms here lean on its fast
// multiplication for their asymptotic bounds. Values handled by the
// public operations are nonnegative unless a function says otherwise;
// a few intermediates (see quadratic.hpp) are signed.

#include <gmpxx.h>

#include <cassert>
#include <compare>
#include <cstdint>
#include <limits>

#include "binjacobi/errors.hpp"

namespace binjacobi {

using Nat = mpz_class;

// 2-adic valuation: a nonnegative count or +infinity (the valuation of 0).
// Infinity is a distinct state, not a sentinel magnitude, so arithmetic on
// it cannot happen by accident.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(unsigned long v) : value_(v) {}

    static constexpr Valuation infinity() {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinity() const { return infinite_; }

    constexpr unsigned long get() const {
        if (infinite_) throw internal_error("Valuation: get() on +infinity");
        return value_;
    }

    // Finite shift: +infinity absorbs.
    constexpr Valuation operator+(unsigned long k) const {
        return infinite_ ? *this : Valuation(value_ + k);
    }

    friend constexpr bool operator==(Valuation a, Valuation b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
        if (a.infinite_ || b.infinite_)
            return (a.infinite_ ? 1 : 0) <=> (b.infinite_ ? 1 : 0);
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(Valuation a, unsigned long k) {
        return !a.infinite_ && a.value_ == k;
    }
    friend constexpr std::strong_ordering operator<=>(Valuation a, unsigned long k) {
        return a <=> Valuation(k);
    }

private:
    unsigned long value_ = 0;
    bool infinite_ = false;
};

inline bool is_odd(const Nat& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }
inline bool is_even(const Nat& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

// nu(x): largest k with 2^k | x; +infinity for x = 0. Sign is ignored.
inline Valuation nu(const Nat& x) {
    if (mpz_sgn(x.get_mpz_t()) == 0) return Valuation::infinity();
    return Valuation(static_cast<unsigned long>(mpz_scan1(x.get_mpz_t(), 0)));
}

// nu for known-nonzero x.
inline unsigned long nu_finite(const Nat& x) {
    if (mpz_sgn(x.get_mpz_t()) == 0)
        throw invalid_input("nu_finite: argument is zero");
    return static_cast<unsigned long>(mpz_scan1(x.get_mpz_t(), 0));
}

// Bits in |x|; 0 for x = 0.
inline std::size_t bit_length(const Nat& x) {
    if (mpz_sgn(x.get_mpz_t()) == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// x mod 2^t, in [0, 2^t).
inline Nat low_bits(const Nat& x, unsigned long t) {
    Nat r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), t);
    return r;
}

inline unsigned long mod_pow2_ul(const Nat& x, unsigned long bits) {
    assert(bits <= 8 * sizeof(unsigned long));
    return mpz_fdiv_ui(x.get_mpz_t(), 1ul << bits);
}

inline Nat pow2(unsigned long k) {
    Nat r;
    mpz_setbit(r.get_mpz_t(), k);
    return r;
}

// x / 2^k, required exact; inexactness is a bug in the caller.
inline Nat shift_right_exact(const Nat& x, unsigned long k) {
    if (k > 0 && mpz_sgn(x.get_mpz_t()) != 0 &&
        mpz_scan1(x.get_mpz_t(), 0) < k)
        throw internal_error("shift_right_exact: value not divisible by 2^k");
    Nat r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

// x / 5, required exact.
inline Nat div5_exact(const Nat& x) {
    if (!mpz_divisible_ui_p(x.get_mpz_t(), 5))
        throw internal_error("div5_exact: value not divisible by 5");
    Nat r;
    mpz_divexact_ui(r.get_mpz_t(), x.get_mpz_t(), 5);
    return r;
}

}  // namespace binjacobi

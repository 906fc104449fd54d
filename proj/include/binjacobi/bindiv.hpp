#pragma once
// bindiv.hpp - binary division with positive quotient.
//
// For nu(a) = 0 < nu(b) = j, produces the odd quotient
//   q = -a / (b/2^j)  mod 2^(j+1),   0 < q < 2^(j+1),
// and r = a + q*(b/2^j), which always satisfies nu(r) > j. Only the low
// j+1 bits of the operands feed the quotient.

#include <cassert>
#include <cstdint>

#include "binjacobi/errors.hpp"
#include "binjacobi/nat.hpp"
#include "binjacobi/parity.hpp"

namespace binjacobi {

struct BinaryDivision {
    Nat q;            // odd, 0 < q < 2^(j+1)
    Nat r;            // a + q*(b/2^j), nu(r) > j
    unsigned long j;  // nu(b)
};

// Division step classes. Good steps shrink a+2b by at least 9/16, bad
// steps shrink it by a factor arbitrarily close to 1, ugly steps keep it
// exactly. A harmless step stands for a maximal run of consecutive ugly
// steps collapsed into one update.
enum class IterClass { good, bad, ugly, harmless };

inline const char* to_string(IterClass c) {
    switch (c) {
        case IterClass::good: return "good";
        case IterClass::bad: return "bad";
        case IterClass::ugly: return "ugly";
        case IterClass::harmless: return "harmless";
    }
    return "?";
}

// Good iff j >= 2, bad iff (j,q) = (1,1), ugly iff (j,q) = (1,3); odd q
// with 1 <= q < 2^(j+1) has no other option.
inline IterClass classify(Valuation j, const Nat& q) {
    assert(!j.is_infinity() && j.get() >= 1);
    assert(is_odd(q) && q > 0 && bit_length(q) <= j.get() + 1);
    if (j.get() >= 2) return IterClass::good;
    return q == 1 ? IterClass::bad : IterClass::ugly;
}

namespace detail {

// Inverse of odd x mod 2^64. Newton lifting: x is self-inverse mod 8, and
// each step doubles the correct bit count.
inline std::uint64_t inverse_pow2_u64(std::uint64_t x) {
    assert(x & 1);
    std::uint64_t inv = x;             // 3 bits
    inv *= 2 - x * inv;                // 6
    inv *= 2 - x * inv;                // 12
    inv *= 2 - x * inv;                // 24
    inv *= 2 - x * inv;                // 48
    inv *= 2 - x * inv;                // 96 >= 64
    return inv;
}

inline std::uint64_t low_u64(const Nat& x) {
    return static_cast<std::uint64_t>(mpz_get_ui(x.get_mpz_t()));
}

// Inverse of odd x mod 2^t, precision doubling from the word-size seed.
inline Nat inverse_pow2(const Nat& x, unsigned long t) {
    assert(is_odd(x));
    const unsigned long seed_bits = t < 64 ? t : 64;
    Nat inv = low_bits(Nat(static_cast<unsigned long>(inverse_pow2_u64(low_u64(x)))), seed_bits);
    unsigned long prec = seed_bits;
    while (prec < t) {
        prec = prec * 2 < t ? prec * 2 : t;
        Nat e = 2 - low_bits(x, prec) * inv;
        inv = low_bits(inv * e, prec);
    }
    return inv;
}

// q = -a * b_odd^{-1} mod 2^(j+1) for odd a, b_odd; the result is odd and
// positive. Touches only the low j+1 bits of both operands.
inline Nat binary_quotient(const Nat& a, const Nat& b_odd, unsigned long j) {
    const unsigned long t = j + 1;
    if (t <= 64) {
        const std::uint64_t mask =
            t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
        const std::uint64_t q =
            (0 - low_u64(a) * inverse_pow2_u64(low_u64(b_odd))) & mask;
        return Nat(static_cast<unsigned long>(q));
    }
    Nat q = low_bits(low_bits(a, t) * inverse_pow2(b_odd, t), t);
    return pow2(t) - q;  // a odd, so q != 0
}

}  // namespace detail

// BinaryDividePos. j is rederived from b here; the caller's idea of nu(b)
// is not trusted.
inline BinaryDivision binary_divide_pos(const Nat& a, const Nat& b) {
    if (a <= 0 || !is_odd(a))
        throw invalid_input("binary_divide_pos: a must be odd positive");
    if (b <= 0 || !is_even(b))
        throw invalid_input("binary_divide_pos: b must be even positive");
    const unsigned long j = nu_finite(b);
    Nat b_odd = shift_right_exact(b, j);
    Nat q = detail::binary_quotient(a, b_odd, j);
    Nat r = a;
    mpz_addmul(r.get_mpz_t(), q.get_mpz_t(), b_odd.get_mpz_t());
    if (nu_finite(r) <= j)
        throw internal_error("binary_divide_pos: nu(r) <= nu(b)");
    return BinaryDivision{std::move(q), std::move(r), j};
}

}  // namespace binjacobi

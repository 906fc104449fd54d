#pragma once
// oracle.hpp - reference Jacobi symbol via classical reciprocity.
//
// Textbook loop: reduce b mod a, strip twos with the (2|a) rule, swap by
// quadratic reciprocity, repeat. Deliberately shares no reduction code
// with the binary-division family (its own sign handling included), so
// differential tests compare two independent routes.

#include "binjacobi/errors.hpp"
#include "binjacobi/nat.hpp"
#include "binjacobi/parity.hpp"

namespace binjacobi {

// Jacobi symbol (b|a) for odd positive a; b may be any integer.
inline JacobiValue jacobi_oracle(const Nat& b_in, const Nat& a_in) {
    if (a_in <= 0 || !is_odd(a_in))
        throw invalid_input("jacobi_oracle: a must be odd positive");
    Nat a = a_in;
    Nat b;
    mpz_fdiv_r(b.get_mpz_t(), b_in.get_mpz_t(), a.get_mpz_t());  // b in [0, a)
    int sign = 1;
    while (b != 0) {
        const unsigned long t = nu_finite(b);
        mpz_fdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), t);
        const unsigned long a8 = mpz_fdiv_ui(a.get_mpz_t(), 8);
        if ((t & 1) && (a8 == 3 || a8 == 5)) sign = -sign;
        if (a8 % 4 == 3 && mpz_fdiv_ui(b.get_mpz_t(), 4) == 3) sign = -sign;
        std::swap(a, b);
        mpz_fdiv_r(b.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    }
    return a == 1 ? JacobiValue(sign) : JacobiValue(0);
}

}  // namespace binjacobi

#pragma once
// cubic.hpp - the iterative baseline Jacobi loop.
//
// Repeats binary division until 2^nu(b) * a == b, tracking the sign
// exponent from the three low-bit epsilon terms of each step. Worst-case
// iteration count is quadratic in the input size; on average the loop
// sheds about 1.35 bits per iteration. This engine exists for reference,
// statistics and tracing, not for speed.

#include <cassert>
#include <utility>

#include "binjacobi/bindiv.hpp"
#include "binjacobi/nat.hpp"
#include "binjacobi/parity.hpp"
#include "binjacobi/trace.hpp"

namespace binjacobi {

namespace detail {

inline void require_start_state(const Nat& a, const Nat& b, const char* who) {
    if (a <= 0 || !is_odd(a))
        throw invalid_input(std::string(who) + ": a must be odd positive");
    if (b <= 0 || !is_even(b))
        throw invalid_input(std::string(who) + ": b must be even positive");
}

}  // namespace detail

// Jacobi symbol (b|a) for nu(a) = 0 < nu(b) < +infinity.
template <TraceSink S>
JacobiValue cubic_binary_jacobi(Nat a, Nat b, S&& sink) {
    detail::require_start_state(a, b, "cubic_binary_jacobi");
#ifndef NDEBUG
    const std::size_t iter_limit =
        10 * std::max(bit_length(a), bit_length(b)) + 16;
#endif
    SignParity s;
    std::size_t index = 0;
    Nat b_odd, r;
    for (;;) {
        const unsigned long j = nu_finite(b);
        mpz_fdiv_q_2exp(b_odd.get_mpz_t(), b.get_mpz_t(), j);
        if (b_odd == a) break;  // 2^j * a == b
        Nat q = detail::binary_quotient(a, b_odd, j);
        r = a;
        mpz_addmul(r.get_mpz_t(), q.get_mpz_t(), b_odd.get_mpz_t());
        if (nu_finite(r) <= j)
            throw internal_error("cubic_binary_jacobi: nu(r) <= nu(b)");
        sink(IterEvent{index, classify(Valuation(j), q), j, q, 1, a, b});
        s ^= eps_square(a).times(j);
        s ^= eps_recip(a, b_odd);
        s ^= eps_square(b_odd).times(j);
        std::swap(a, b_odd);                                // a <- b/2^j
        mpz_fdiv_q_2exp(b.get_mpz_t(), r.get_mpz_t(), j);   // b <- r/2^j
        ++index;
        assert(index <= iter_limit && "iteration count exceeds 10n: bug");
    }
    return a == 1 ? JacobiValue(1).negated_if(s) : JacobiValue(0);
}

inline JacobiValue cubic_binary_jacobi(Nat a, Nat b) {
    return cubic_binary_jacobi(std::move(a), std::move(b), NullSink{});
}

inline std::pair<JacobiValue, IterTrace> cubic_binary_jacobi_traced(Nat a, Nat b) {
    IterTrace trace;
    JacobiValue v =
        cubic_binary_jacobi(std::move(a), std::move(b), RecordingSink{&trace});
    return {v, std::move(trace)};
}

}  // namespace binjacobi

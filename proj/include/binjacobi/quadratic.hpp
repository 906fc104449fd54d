#pragma once
// quadratic.hpp - division loop with ugly runs collapsed.
//
// A state is ugly exactly when (j,q) = (1,3); runs of consecutive ugly
// steps neither shrink a+2b nor make progress worth their cost, but their
// length is predictable in advance: with d = a - b/2, exactly
// floor(nu(d)/2) ugly steps follow. One closed-form "harmless" update
// replaces the whole run, which caps the loop at O(n) iterations.

#include <cassert>
#include <limits>
#include <utility>

#include "binjacobi/bindiv.hpp"
#include "binjacobi/cubic.hpp"
#include "binjacobi/nat.hpp"
#include "binjacobi/parity.hpp"
#include "binjacobi/trace.hpp"

namespace binjacobi {

struct HarmlessStep {
    Nat d;            // a - b'' (signed)
    unsigned long m;  // run length actually taken
    Nat c;            // (d - (-1)^m * d/4^m) / 5 (signed)
};

inline constexpr unsigned long harmless_uncapped =
    std::numeric_limits<unsigned long>::max();

// Parameters of the consolidated update replacing m ugly steps starting
// from odd a and odd b'' = b/2 with a - b'' = 0 (mod 4). The run may be
// cut short at m_cap; divisions by 4^m and 5 stay exact either way, for
// any ordering of a and b''. d = 0 (the state (a, 2a) is an ugly-step
// fixed point) is only meaningful capped, with nu(d) taken as +infinity.
inline HarmlessStep harmless_params(const Nat& a, const Nat& b_pp,
                                    unsigned long m_cap = harmless_uncapped) {
    if (!is_odd(a) || !is_odd(b_pp))
        throw invalid_input("harmless_params: operands must be odd");
    Nat d = a - b_pp;
    const Valuation nd = nu(d);
    if (nd.is_infinity()) {
        if (m_cap == harmless_uncapped)
            throw invalid_input("harmless_params: a == b'' needs a finite run cap");
        return HarmlessStep{std::move(d), m_cap, Nat(0)};
    }
    if (nd.get() < 2)
        throw invalid_input("harmless_params: a - b'' must be a multiple of 4");
    unsigned long m = nd.get() / 2;
    if (m > m_cap) m = m_cap;
    Nat scaled = shift_right_exact(d, 2 * m);
    Nat c = div5_exact(m % 2 == 0 ? Nat(d - scaled) : Nat(d + scaled));
    return HarmlessStep{std::move(d), m, std::move(c)};
}

// Jacobi symbol (b|a) for nu(a) = 0 < nu(b) < +infinity. Same value as
// the cubic loop; the trace reports one harmless record of run length m
// where the cubic trace would show m ugly records.
template <TraceSink S>
JacobiValue quadratic_binary_jacobi(Nat a, Nat b, S&& sink) {
    detail::require_start_state(a, b, "quadratic_binary_jacobi");
    SignParity s;
    std::size_t index = 0;
    Nat b_odd, r;
    for (;;) {
        const unsigned long j = nu_finite(b);
        mpz_fdiv_q_2exp(b_odd.get_mpz_t(), b.get_mpz_t(), j);
        if (b_odd == a) break;  // 2^j * a == b
        s ^= eps_square(a).times(j);
        Nat q = detail::binary_quotient(a, b_odd, j);
        r = a;
        mpz_addmul(r.get_mpz_t(), q.get_mpz_t(), b_odd.get_mpz_t());
        if (nu_finite(r) <= j)
            throw internal_error("quadratic_binary_jacobi: nu(r) <= nu(b)");
        if (j == 1 && q == 3) {
            HarmlessStep h = harmless_params(a, b_odd);
            sink(IterEvent{index, IterClass::harmless, j, q, h.m, a, b});
            s ^= eps_neg(a).times(h.m);
            // (a, b) <- (a - 4c, b + 2c)
            mpz_submul_ui(a.get_mpz_t(), h.c.get_mpz_t(), 4);
            mpz_addmul_ui(b.get_mpz_t(), h.c.get_mpz_t(), 2);
            assert(a > 0 && is_odd(a) && b > 0 && is_even(b));
        } else {
            sink(IterEvent{index, classify(Valuation(j), q), j, q, 1, a, b});
            s ^= eps_recip(a, b_odd);
            std::swap(a, b_odd);
            mpz_fdiv_q_2exp(b.get_mpz_t(), r.get_mpz_t(), j);
        }
        s ^= eps_square(a).times(j);  // new a, same j
        ++index;
    }
    return a == 1 ? JacobiValue(1).negated_if(s) : JacobiValue(0);
}

inline JacobiValue quadratic_binary_jacobi(Nat a, Nat b) {
    return quadratic_binary_jacobi(std::move(a), std::move(b), NullSink{});
}

inline std::pair<JacobiValue, IterTrace> quadratic_binary_jacobi_traced(Nat a, Nat b) {
    IterTrace trace;
    JacobiValue v =
        quadratic_binary_jacobi(std::move(a), std::move(b), RecordingSink{&trace});
    return {v, std::move(trace)};
}

}  // namespace binjacobi

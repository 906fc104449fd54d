#pragma once
// fast.hpp - subquadratic Jacobi via half-reduction matrices.
//
// half_binary_jacobi computes only the leading part of the division
// sequence of (a, b): all steps whose cumulative valuation fits a budget
// k, packaged as a 2x2 integer matrix R with scale j (the actual linear
// map is 2^(-2j) * R) plus the sign exponent those steps contribute. The
// quotients of the prefix depend only on the low 2k+2 bits of the inputs,
// so the recursion truncates, solves two half-size budgets, and glues the
// results with matrix products. fast_binary_jacobi drives it to
// completion in O(M(n) log n) time.
//
// Below the basecase threshold the budget is burned with the plain
// iterative loop instead; by default that loop takes ugly steps one at a
// time, which yields the exact same (s, j, R) as consolidating them.

#include <cassert>
#include <utility>

#include "binjacobi/bindiv.hpp"
#include "binjacobi/cubic.hpp"
#include "binjacobi/nat.hpp"
#include "binjacobi/parity.hpp"
#include "binjacobi/quadratic.hpp"

#ifndef BINJACOBI_HALF_BASECASE_BITS
#define BINJACOBI_HALF_BASECASE_BITS 64
#endif

namespace binjacobi {

// Integer matrix R with scale exponent j, standing for 2^(-2j) * R.
// |det R| = 4^j throughout.
struct TransformMatrix {
    Nat r11{1}, r12{0};
    Nat r21{0}, r22{1};
    unsigned long scale = 0;

    static TransformMatrix identity() { return TransformMatrix{}; }

    bool is_identity() const {
        return scale == 0 && r11 == 1 && r12 == 0 && r21 == 0 && r22 == 1;
    }
};

// Determinant of the raw entries (unscaled).
inline Nat det(const TransformMatrix& t) {
    return t.r11 * t.r22 - t.r12 * t.r21;
}

// s * q as scaled transforms: entries multiply, scale exponents add.
inline TransformMatrix mat_mul(const TransformMatrix& s, const TransformMatrix& q) {
    if (s.is_identity()) return q;
    if (q.is_identity()) return s;
    TransformMatrix out;
    out.r11 = s.r11 * q.r11 + s.r12 * q.r21;
    out.r12 = s.r11 * q.r12 + s.r12 * q.r22;
    out.r21 = s.r21 * q.r11 + s.r22 * q.r21;
    out.r22 = s.r21 * q.r12 + s.r22 * q.r22;
    out.scale = s.scale + q.scale;
    return out;
}

// 2^(-2j) * R * (a, b); the divisions must come out exact.
inline std::pair<Nat, Nat> mat_apply(const TransformMatrix& t, const Nat& a, const Nat& b) {
    if (t.is_identity()) return {a, b};
    Nat x = t.r11 * a;
    mpz_addmul(x.get_mpz_t(), t.r12.get_mpz_t(), b.get_mpz_t());
    Nat y = t.r21 * a;
    mpz_addmul(y.get_mpz_t(), t.r22.get_mpz_t(), b.get_mpz_t());
    return {shift_right_exact(x, 2 * t.scale), shift_right_exact(y, 2 * t.scale)};
}

// Matrix of one good or bad division step: [[0, 2^j0], [2^j0, q]], scale j0.
inline TransformMatrix q_good_bad(unsigned long j0, const Nat& q) {
    assert(j0 >= 1 && is_odd(q) && q > 0 && bit_length(q) <= j0 + 1);
    TransformMatrix t;
    t.r11 = 0;
    t.r12 = pow2(j0);
    t.r21 = t.r12;
    t.r22 = q;
    t.scale = j0;
    return t;
}

// Matrix of m consolidated ugly steps: equals [[0,2],[2,3]]^m, scale m.
inline TransformMatrix q_harmless(unsigned long m) {
    assert(m >= 1);
    const Nat p = pow2(2 * m);  // 4^m
    const long sig = m % 2 == 0 ? 1 : -1;
    TransformMatrix t;
    t.r11 = div5_exact(Nat(p + 4 * sig));
    t.r12 = div5_exact(Nat(2 * (p - sig)));
    t.r21 = t.r12;
    t.r22 = div5_exact(Nat(4 * p + sig));
    t.scale = m;
    return t;
}

// Outcome of a half reduction: with (c, d) = 2^(-2j) R (a, b),
//   (b|a) = (-1)^s (d|c)   and   nu(2^j c) <= k < nu(2^j d).
struct HalfResult {
    SignParity s;
    unsigned long j = 0;
    TransformMatrix r;
};

struct FastConfig {
    // Use the iterative basecase once 2k+2 fits in this many bits.
    unsigned long basecase_bits = BINJACOBI_HALF_BASECASE_BITS;
    // Consolidate ugly runs inside the basecase too (slower on average;
    // kept for differential testing of the two harmless paths).
    bool basecase_harmless = false;
    // Budget divisor of the top-level loop: k = max(nu(b), len(b) / k_divisor).
    unsigned long k_divisor = 3;
};

// Iterative half reduction: greedily takes division steps while the
// cumulative valuation stays within k. With use_harmless each ugly run
// collapses into one capped harmless step; the returned triple is
// identical either way.
inline HalfResult half_binary_jacobi_base(Nat a, Nat b, unsigned long k,
                                          bool use_harmless = false) {
    if (a <= 0 || !is_odd(a))
        throw invalid_input("half_binary_jacobi_base: a must be odd positive");
    if (b < 0 || (b != 0 && !is_even(b)))
        throw invalid_input("half_binary_jacobi_base: b must be even or zero");
    HalfResult res;
    Nat b_odd, r;
    for (;;) {
        const Valuation nb = nu(b);  // +infinity once b == 0
        if (nb + res.j > k) break;
        const unsigned long j0 = nb.get();
        res.s ^= eps_square(a).times(j0);
        mpz_fdiv_q_2exp(b_odd.get_mpz_t(), b.get_mpz_t(), j0);
        Nat q = detail::binary_quotient(a, b_odd, j0);
        r = a;
        mpz_addmul(r.get_mpz_t(), q.get_mpz_t(), b_odd.get_mpz_t());
        if (nu_finite(r) <= j0)
            throw internal_error("half_binary_jacobi_base: nu(r) <= nu(b)");
        unsigned long m;
        TransformMatrix q_step;
        if (use_harmless && j0 == 1 && q == 3) {
            HarmlessStep h = harmless_params(a, b_odd, k - res.j);
            m = h.m;
            res.s ^= eps_neg(a).times(m);
            mpz_submul_ui(a.get_mpz_t(), h.c.get_mpz_t(), 4);
            mpz_addmul_ui(b.get_mpz_t(), h.c.get_mpz_t(), 2);
            q_step = q_harmless(m);
        } else {
            res.s ^= eps_recip(a, b_odd);
            std::swap(a, b_odd);
            mpz_fdiv_q_2exp(b.get_mpz_t(), r.get_mpz_t(), j0);
            q_step = q_good_bad(j0, q);
            m = j0;
        }
        res.s ^= eps_square(a).times(j0);
        res.r = mat_mul(q_step, res.r);
        res.j += m;
    }
    assert(res.j == res.r.scale);
    return res;
}

namespace detail {

inline HalfResult half_entry(const Nat& a, const Nat& b, unsigned long k,
                             const FastConfig& cfg);

// Recursive body; preconditions hold by construction.
inline HalfResult half_recursive(const Nat& a, const Nat& b, unsigned long k,
                                 const FastConfig& cfg) {
    if (nu(b) > k) return HalfResult{};  // covers b == 0
    const unsigned long k1 = k / 2;
    const HalfResult h1 = half_entry(low_bits(a, 2 * k1 + 2),
                                     low_bits(b, 2 * k1 + 2), k1, cfg);
    auto [ap, bp] = mat_apply(h1.r, a, b);
    const Valuation j0v = nu(bp);
    if (j0v + h1.j > k) return h1;  // budget exhausted before the pivot step
    const unsigned long j0 = j0v.get();
    SignParity s0 = eps_square(ap).times(j0);
    Nat b_odd = shift_right_exact(bp, j0);
    Nat q = detail::binary_quotient(ap, b_odd, j0);
    Nat r = ap;
    mpz_addmul(r.get_mpz_t(), q.get_mpz_t(), b_odd.get_mpz_t());
    if (nu_finite(r) <= j0)
        throw internal_error("half_binary_jacobi: nu(r) <= nu(b)");
    unsigned long m;
    Nat a2, b2;
    TransformMatrix q_step;
    if (j0 == 1 && q == 3) {
        HarmlessStep h = harmless_params(ap, b_odd, k - h1.j);
        m = h.m;
        s0 ^= eps_neg(ap).times(m);
        a2 = ap;
        mpz_submul_ui(a2.get_mpz_t(), h.c.get_mpz_t(), 4);
        b2 = 2 * (b_odd + h.c);
        q_step = q_harmless(m);
    } else {
        s0 ^= eps_recip(ap, b_odd);
        a2 = std::move(b_odd);
        b2 = shift_right_exact(r, j0);
        q_step = q_good_bad(j0, q);
        m = j0;
    }
    s0 ^= eps_square(a2).times(j0);
    assert(a2 > 0 && is_odd(a2) && b2 >= 0 && (b2 == 0 || is_even(b2)));
    const unsigned long k2 = k - (m + h1.j);
    const HalfResult h2 = half_entry(low_bits(a2, 2 * k2 + 2),
                                     low_bits(b2, 2 * k2 + 2), k2, cfg);
    return HalfResult{s0 ^ h1.s ^ h2.s, h1.j + h2.j + m,
                      mat_mul(mat_mul(h2.r, q_step), h1.r)};
}

inline HalfResult half_entry(const Nat& a, const Nat& b, unsigned long k,
                             const FastConfig& cfg) {
    if (2 * k + 2 <= cfg.basecase_bits)
        return half_binary_jacobi_base(a, b, k, cfg.basecase_harmless);
    return half_recursive(a, b, k, cfg);
}

}  // namespace detail

// HalfBinaryJacobi: prefix of the division sequence within valuation
// budget k, as (sign exponent, consumed valuation, transform).
inline HalfResult half_binary_jacobi(const Nat& a, const Nat& b, unsigned long k,
                                     const FastConfig& cfg = {}) {
    if (a <= 0 || !is_odd(a))
        throw invalid_input("half_binary_jacobi: a must be odd positive");
    if (b < 0 || (b != 0 && !is_even(b)))
        throw invalid_input("half_binary_jacobi: b must be even or zero");
    return detail::half_entry(a, b, k, cfg);
}

// Jacobi symbol (b|a) for nu(a) = 0 < nu(b) < +infinity, subquadratic.
inline JacobiValue fast_binary_jacobi(Nat a, Nat b, const FastConfig& cfg = {}) {
    detail::require_start_state(a, b, "fast_binary_jacobi");
    if (cfg.k_divisor == 0) throw invalid_input("fast_binary_jacobi: k_divisor must be positive");
    SignParity s;
    for (;;) {
        const unsigned long j = nu_finite(b);
        Nat b_odd = shift_right_exact(b, j);
        if (b_odd == a) break;  // 2^j * a == b
        const unsigned long k =
            std::max(j, static_cast<unsigned long>(bit_length(b)) / cfg.k_divisor);
        HalfResult h = detail::half_entry(a, b, k, cfg);
        assert(h.j >= 1);  // k >= nu(b) forces at least one step
        s ^= h.s;
        std::tie(a, b) = mat_apply(h.r, a, b);
    }
    return a == 1 ? JacobiValue(1).negated_if(s) : JacobiValue(0);
}

}  // namespace binjacobi

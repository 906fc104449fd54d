#pragma once
// jacobi.hpp - public entry point: normalization plus algorithm dispatch.
//
// The division engines want b even positive with a odd positive. For
// arbitrary integer b, (b|a) = (-1)^((a-1)/2) (-b|a) removes a sign and
// (b|a) = (b+a|a) removes oddness, in that order.

#include <string>
#include <utility>
#include <variant>

#include "binjacobi/cubic.hpp"
#include "binjacobi/errors.hpp"
#include "binjacobi/fast.hpp"
#include "binjacobi/nat.hpp"
#include "binjacobi/oracle.hpp"
#include "binjacobi/parity.hpp"
#include "binjacobi/quadratic.hpp"

namespace binjacobi {

enum class Algorithm { cubic, quadratic, fast, oracle };

inline const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::cubic: return "cubic";
        case Algorithm::quadratic: return "quadratic";
        case Algorithm::fast: return "fast";
        case Algorithm::oracle: return "oracle";
    }
    return "?";
}

inline Algorithm parse_algorithm(const std::string& name) {
    if (name == "cubic") return Algorithm::cubic;
    if (name == "quadratic") return Algorithm::quadratic;
    if (name == "fast") return Algorithm::fast;
    if (name == "oracle") return Algorithm::oracle;
    throw invalid_input("unknown algorithm: " + name);
}

struct Normalized {
    Nat b;        // even positive, nu(a) = 0 < nu(b)
    SignParity s; // (b_in|a) = (-1)^s (b|a)
};

// Either the symbol is already decided (a = 1, or b = 0 with a > 1), or
// b is rewritten even positive with the sign parity it cost.
using NormalizeResult = std::variant<JacobiValue, Normalized>;

inline NormalizeResult normalize(const Nat& b_in, const Nat& a) {
    if (a <= 0 || !is_odd(a))
        throw invalid_input("normalize: a must be odd positive");
    if (a == 1) return JacobiValue(1);
    if (b_in == 0) return JacobiValue(0);
    Normalized out;
    out.b = b_in;
    if (out.b < 0) {
        mpz_neg(out.b.get_mpz_t(), out.b.get_mpz_t());
        out.s ^= eps_neg(a);
    }
    if (is_odd(out.b)) out.b += a;
    return out;
}

// Jacobi symbol (b|a) for odd positive a and any integer b. Every
// algorithm choice returns the same value.
inline JacobiValue jacobi(const Nat& b, const Nat& a,
                          Algorithm alg = Algorithm::fast) {
    if (alg == Algorithm::oracle) return jacobi_oracle(b, a);
    NormalizeResult norm = normalize(b, a);
    if (auto* early = std::get_if<JacobiValue>(&norm)) return *early;
    auto& [bn, s] = std::get<Normalized>(norm);
    JacobiValue v = [&] {
        switch (alg) {
            case Algorithm::cubic: return cubic_binary_jacobi(a, std::move(bn));
            case Algorithm::quadratic: return quadratic_binary_jacobi(a, std::move(bn));
            default: return fast_binary_jacobi(a, std::move(bn));
        }
    }();
    return v.negated_if(s);
}

}  // namespace binjacobi

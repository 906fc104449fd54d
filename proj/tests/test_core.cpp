#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "binjacobi/jacobi.hpp"
#include "binjacobi/rng.hpp"

using namespace binjacobi;

namespace {
constexpr Algorithm all_algs[] = {Algorithm::cubic, Algorithm::quadratic,
                                  Algorithm::fast, Algorithm::oracle};
}

TEST_CASE("normalize: pinned examples") {
    auto r1 = normalize(Nat(-7), Nat(5));
    auto& n1 = std::get<Normalized>(r1);
    CHECK(n1.b == 12);  // eps_neg(5) = 0, then 7 odd -> 7+5
    CHECK(n1.s == SignParity(0));

    CHECK(std::get<JacobiValue>(normalize(Nat(0), Nat(1))) == JacobiValue(1));
    CHECK(std::get<JacobiValue>(normalize(Nat(0), Nat(5))) == JacobiValue(0));
    CHECK(std::get<JacobiValue>(normalize(Nat(-3), Nat(1))) == JacobiValue(1));

    auto r2 = normalize(Nat(-4), Nat(3));
    auto& n2 = std::get<Normalized>(r2);
    CHECK(n2.b == 4);
    CHECK(n2.s == SignParity(1));  // eps_neg(3) = 1

    CHECK_THROWS_AS(normalize(Nat(1), Nat(4)), invalid_input);
    CHECK_THROWS_AS(normalize(Nat(1), Nat(-3)), invalid_input);
    CHECK_THROWS_AS(normalize(Nat(1), Nat(0)), invalid_input);
}

TEST_CASE("normalize: output is admissible and sign-correct") {
    std::mt19937_64 gen(31);
    for (int i = 0; i < 2000; ++i) {
        const Nat a = random_odd(gen, 2 + gen() % 48);
        Nat b = random_bits(gen, 1 + gen() % 50);
        if (gen() & 1) b = -b;
        auto res = normalize(b, a);
        if (auto* n = std::get_if<Normalized>(&res)) {
            REQUIRE(n->b > 0);
            REQUIRE(is_even(n->b));
            const int expect = jacobi_oracle(b, a).value();
            const int got = n->s.sign() * jacobi_oracle(n->b, a).value();
            REQUIRE(expect == got);
        } else {
            REQUIRE((a == 1 || b == 0));
        }
    }
}

TEST_CASE("oracle: pinned examples") {
    CHECK(jacobi_oracle(Nat(2), Nat(3)) == JacobiValue(-1));
    CHECK(jacobi_oracle(Nat(5), Nat(21)) == JacobiValue(1));
    CHECK(jacobi_oracle(Nat(1), Nat(9999)) == JacobiValue(1));
    CHECK(jacobi_oracle(Nat(1), Nat(1)) == JacobiValue(1));
    CHECK(jacobi_oracle(Nat(0), Nat(1)) == JacobiValue(1));
    CHECK(jacobi_oracle(Nat(0), Nat(7)) == JacobiValue(0));
    CHECK(jacobi_oracle(Nat(-7), Nat(5)) == JacobiValue(-1));
    CHECK(jacobi_oracle(Nat(33), Nat(9999)) == JacobiValue(0));
    CHECK(jacobi_oracle(Nat(34), Nat(9999)) == JacobiValue(-1));
    CHECK(jacobi_oracle(Nat(35), Nat(9999)) == JacobiValue(1));
    CHECK_THROWS_AS(jacobi_oracle(Nat(1), Nat(10)), invalid_input);
}

TEST_CASE("oracle: agrees with Euler's criterion for prime moduli") {
    // (b|p) = b^((p-1)/2) mod p for odd prime p.
    const unsigned long primes[] = {3, 5, 7, 11, 13, 17, 101, 257, 1009};
    for (unsigned long p : primes) {
        const Nat np(p);
        for (unsigned long b = 0; b < p; ++b) {
            Nat power, e((p - 1) / 2);
            mpz_powm(power.get_mpz_t(), Nat(b).get_mpz_t(), e.get_mpz_t(),
                     np.get_mpz_t());
            const int expect = power == 0 ? 0 : (power == 1 ? 1 : -1);
            REQUIRE(jacobi_oracle(Nat(b), np).value() == expect);
        }
    }
}

TEST_CASE("jacobi dispatch: pinned examples") {
    CHECK(jacobi(Nat(30), Nat(7), Algorithm::fast) == JacobiValue(1));
    CHECK(jacobi(Nat(2), Nat(3), Algorithm::cubic) == JacobiValue(-1));
    CHECK(jacobi(Nat(6), Nat(3), Algorithm::quadratic) == JacobiValue(0));
    CHECK(jacobi(Nat(0x1E), Nat(7), Algorithm::cubic) == JacobiValue(1));
}

TEST_CASE("jacobi dispatch: all algorithms agree on random signed inputs") {
    std::mt19937_64 gen(37);
    for (int i = 0; i < 1500; ++i) {
        const Nat a = random_odd(gen, 2 + gen() % 96);
        Nat b = random_bits(gen, 1 + gen() % 110);
        if (gen() & 1) b = -b;
        const int expect = jacobi(b, a, Algorithm::oracle).value();
        for (Algorithm alg : all_algs)
            REQUIRE(jacobi(b, a, alg).value() == expect);
    }
}

TEST_CASE("jacobi is multiplicative in the numerator") {
    std::mt19937_64 gen(41);
    for (int i = 0; i < 800; ++i) {
        const Nat a = random_odd(gen, 2 + gen() % 64);
        Nat b = random_bits(gen, 1 + gen() % 64);
        Nat c = random_bits(gen, 1 + gen() % 64);
        if (gen() & 1) b = -b;
        if (gen() & 1) c = -c;
        const JacobiValue lhs = jacobi(b * c, a);
        const JacobiValue rhs = jacobi(b, a) * jacobi(c, a);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("jacobi is periodic in the numerator") {
    std::mt19937_64 gen(43);
    for (int i = 0; i < 800; ++i) {
        const Nat a = random_odd(gen, 2 + gen() % 64);
        Nat b = random_bits(gen, 1 + gen() % 64);
        if (gen() & 1) b = -b;
        REQUIRE(jacobi(b, a) == jacobi(b + a, a));
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "binjacobi/cubic.hpp"
#include "binjacobi/oracle.hpp"
#include "binjacobi/rng.hpp"

using namespace binjacobi;

namespace {

// Online structural checks on one run:
//  - a stays odd positive, b even positive;
//  - a+2b never grows, shrinks strictly on good/bad (by >= 16/9 on good),
//    and is exactly preserved on ugly;
//  - the step class is forced by mu = nu(a - b/2): good for mu = 0, bad
//    for mu = 1, ugly for mu >= 2 (so every ugly run lasts exactly
//    floor(mu/2) steps and ends as mu's parity dictates).
struct StructureCheck {
    Nat prev_weight{-1};
    IterClass prev_cls = IterClass::good;
    std::vector<IterClass>* classes = nullptr;

    void operator()(const IterEvent& e) {
        REQUIRE(e.a > 0);
        REQUIRE(is_odd(e.a));
        REQUIRE(e.b > 0);
        REQUIRE(is_even(e.b));

        const Nat weight = e.a + 2 * e.b;
        if (prev_weight >= 0) {
            switch (prev_cls) {
                case IterClass::good:
                    REQUIRE(16 * weight <= 9 * prev_weight);
                    break;
                case IterClass::bad:
                    REQUIRE(weight < prev_weight);
                    break;
                case IterClass::ugly:
                    REQUIRE(weight == prev_weight);
                    break;
                default:
                    FAIL("cubic trace may not contain harmless records");
            }
        }
        prev_weight = weight;
        prev_cls = e.cls;

        const Nat d = e.a - e.b / 2;
        const Valuation mu = nu(d);
        REQUIRE(!mu.is_infinity());
        const IterClass expected = mu == 0ul ? IterClass::good
                                 : mu == 1ul ? IterClass::bad
                                             : IterClass::ugly;
        REQUIRE(e.cls == expected);

        if (classes) classes->push_back(e.cls);
    }
};

}  // namespace

TEST_CASE("cubic: pinned examples") {
    auto [v1, t1] = cubic_binary_jacobi_traced(Nat(3), Nat(2));
    CHECK(v1 == JacobiValue(-1));
    CHECK(t1.size() == 1);

    auto [v2, t2] = cubic_binary_jacobi_traced(Nat(3), Nat(6));
    CHECK(v2 == JacobiValue(0));
    CHECK(t2.empty());  // 2*3 = 6: loop never entered

    auto [v3, t3] = cubic_binary_jacobi_traced(Nat(7), Nat(30));
    CHECK(v3 == JacobiValue(1));
    CHECK(t3.size() == 6);

    CHECK_THROWS_AS(cubic_binary_jacobi(Nat(4), Nat(2)), invalid_input);
    CHECK_THROWS_AS(cubic_binary_jacobi(Nat(3), Nat(5)), invalid_input);
    CHECK_THROWS_AS(cubic_binary_jacobi(Nat(3), Nat(0)), invalid_input);
}

TEST_CASE("cubic: worst case at 26 bits runs 64 iterations") {
    std::uint64_t iters = 0;
    cubic_binary_jacobi(Nat(15548029), Nat(66067306),
                        [&](const IterEvent&) { ++iters; });
    CHECK(iters == 64);
}

TEST_CASE("cubic: matches oracle exhaustively below 2^9") {
    for (unsigned long a = 1; a < (1ul << 9); a += 2)
        for (unsigned long b = 2; b < (1ul << 9); b += 2)
            REQUIRE(cubic_binary_jacobi(Nat(a), Nat(b)) ==
                    jacobi_oracle(Nat(b), Nat(a)));
}

TEST_CASE("cubic: matches oracle on random 256-bit pairs") {
    std::mt19937_64 gen(47);
    for (int i = 0; i < 200; ++i) {
        const Nat a = random_odd(gen, 256);
        const Nat b = random_even_positive(gen, 256);
        REQUIRE(cubic_binary_jacobi(a, b) == jacobi_oracle(b, a));
    }
}

TEST_CASE("cubic: trace structure holds on random runs") {
    std::mt19937_64 gen(53);
    for (int i = 0; i < 300; ++i) {
        const Nat a = random_odd(gen, 2 + gen() % 256);
        const Nat b = random_even_positive(gen, 2 + gen() % 256);
        cubic_binary_jacobi(a, b, StructureCheck{});
    }
}

TEST_CASE("cubic: trace structure holds exhaustively on tiny operands") {
    for (unsigned long a = 1; a < (1ul << 6); a += 2)
        for (unsigned long b = 2; b < (1ul << 6); b += 2)
            cubic_binary_jacobi(Nat(a), Nat(b), StructureCheck{});
}

TEST_CASE("cubic: record count equals loop executions and fields are consistent") {
    auto [v, trace] = cubic_binary_jacobi_traced(Nat(549), Nat(802));
    CHECK(trace.size() == 19);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        REQUIRE(trace[i].index == i);
        REQUIRE(trace[i].run_len == 1);
        REQUIRE(trace[i].a_mod8 % 2 == 1);
        REQUIRE(trace[i].b_mod8 % 2 == 0);
        REQUIRE(trace[i].bits_a >= 1);
        if (trace[i].cls == IterClass::ugly) REQUIRE(trace[i].q == 3);
        if (trace[i].cls == IterClass::bad) REQUIRE(trace[i].q == 1);
        if (trace[i].cls == IterClass::good) REQUIRE(trace[i].j >= 2);
    }
}

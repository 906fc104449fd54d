#pragma once
// rng.hpp - deterministic operand generation.
//
// mt19937_64 raw output words feed mpz_import directly; no distribution
// adapters, so identical seeds give identical operands on any platform.

#include <cstdint>
#include <random>
#include <vector>

#include "binjacobi/nat.hpp"

namespace binjacobi {

// Stream-splitting hash (splitmix64 finalizer) for per-chunk sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform value in [0, 2^bits).
inline Nat random_bits(std::mt19937_64& gen, unsigned long bits) {
    if (bits == 0) return Nat(0);
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> raw(words);
    for (auto& w : raw) w = gen();
    Nat x;
    mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, raw.data());
    return low_bits(x, bits);
}

// Uniform odd value in [1, 2^bits); bits >= 1.
inline Nat random_odd(std::mt19937_64& gen, unsigned long bits) {
    return 2 * random_bits(gen, bits - 1) + 1;
}

// Uniform even value in [2, 2^bits); bits >= 2.
inline Nat random_even_positive(std::mt19937_64& gen, unsigned long bits) {
    Nat half;
    do {
        half = random_bits(gen, bits - 1);
    } while (half == 0);
    return 2 * half;
}

// Force a value to exactly `bits` bits (used where operand length must be
// pinned, e.g. drift and timing runs).
inline Nat with_top_bit(Nat x, unsigned long bits) {
    mpz_setbit(x.get_mpz_t(), bits - 1);
    return x;
}

}  // namespace binjacobi

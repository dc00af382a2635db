#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nclab {

// 128-bit unsigned arithmetic for exact counts (code sizes, receiver counts,
// q-binomials). Anything that can exceed 2^127 is computed saturating and
// compared, never materialized.
using u128 = unsigned __int128;

inline constexpr u128 U128_MAX = ~static_cast<u128>(0);

std::string to_string_u128(u128 v);

inline bool mul_overflows(u128 a, u128 b) {
    return a != 0 && b > U128_MAX / a;
}

// base^e, throws std::overflow_error past 2^128-1
u128 pow_u128(u128 base, uint64_t e);

// base^e, clamped to U128_MAX on overflow
u128 pow_u128_sat(u128 base, uint64_t e);

bool is_prime(uint64_t n);

struct PrimePower {
    uint64_t p;
    uint32_t e;
};

// n = p^e with p prime, e >= 1, if such a decomposition exists
std::optional<PrimePower> as_prime_power(uint64_t n);

// smallest prime power >= n (n >= 2)
uint64_t next_prime_power(uint64_t n);

// largest prime power < n, throws if none (n <= 2)
uint64_t prev_prime_power(uint64_t n);

// exact C(n, k), throws std::overflow_error if it does not fit
u128 binomial_u128(uint64_t n, uint64_t k);

// k-subsets of {0..n-1} in lexicographic order
class CombinationIter {
public:
    CombinationIter(uint64_t n, uint64_t k);
    bool next(std::vector<uint32_t>& out);  // false when exhausted

private:
    uint64_t n_, k_;
    bool started_ = false;
    std::vector<uint32_t> cur_;
};

// index -> k-subset under the same lexicographic order
std::vector<uint32_t> combination_unrank(uint64_t n, uint64_t k, u128 index);

// Deterministic 64-bit generator (splitmix64). Used for every seeded
// operation so that outputs are reproducible across platforms; std::shuffle
// and the <random> distributions are implementation-defined and are not used.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-enough modulo draw; bias is irrelevant for search/sampling here
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

}  // namespace nclab

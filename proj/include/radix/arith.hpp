#pragma once

#include <optional>
#include <utility>

#include "radix/numutil.hpp"

namespace radix {

// p-adic valuation v_p(x) of a nonzero integer.  p must be prime.
long long vp(const BigInt& x, const BigInt& p);

// Write a = b^n * a' with a' free of n-th powers; returns (a', b).
// Throws if the power-free part cannot be certified with the given trial
// division bound (only possible for |a| with a composite cofactor beyond
// bound^3 that is not a perfect prime power).
std::pair<BigInt, BigInt> power_free_reduce(const BigInt& a, long long n,
                                            long long trial_bound = 1000000);

// Vahlen-Capelli criterion: x^n - a irreducible over Q iff a is not a q-th
// power for any prime q | n, and additionally a is not of the form -4 c^4
// when 4 | n.  Assumes a != 0.
bool is_irreducible_radical(long long n, const BigInt& a);

// Sentinel standing in for v_p(0) when a unit power hits 1 exactly (the
// congruence depth is unbounded); larger than any attainable valuation.
inline constexpr int W_UNBOUNDED = 1 << 20;

struct RadicalInput {
    long long n = 0;  // degree, n >= 2
    BigInt a;         // radicand, x^n - a irreducible
    int m = 0;        // v_2(n) for the 2-adic profile; set per prime elsewhere
    long long n0 = 0; // odd part of n

    // Validates n >= 2 and x^n - a irreducible; fills m, n0.  a may carry
    // n-th power content: the case formulas read valuations off a as given
    // and the generated field is unchanged by stripping the power.
    static RadicalInput make(long long n, const BigInt& a);
};

struct NormalizedInput {
    RadicalInput input;      // keeps a exactly as passed
    bool reduced = false;    // true when a carries an n-th power
    BigInt removed_root = 1; // the root that could be stripped from a
};

// Like RadicalInput::make but additionally detects n-th power content.
NormalizedInput normalize_input(long long n, const BigInt& a);

// Quantities controlling the splitting of 2 in Q(a^(1/n)).
struct TwoProfile {
    BigInt a0;                   // odd part of a (sign included)
    std::optional<long long> h;  // v_2(a) = h * 2^k with h odd, when 2 | a
    std::optional<int> k;
    std::optional<int> w;        // v_2(a - 1), when a odd
    int w0 = 0;                  // v_2(a0 - 1)
    int t = 0;                   // max(0, w0 - 2)
    long long d = 1;             // gcd(h, n0); n0 when a is odd
};
TwoProfile profile2(const RadicalInput& in);

// Same data for an odd prime p.
struct OddProfile {
    long long p = 0;
    int m = 0;                   // v_p(n)
    long long n0 = 0;            // n / p^m
    BigInt a0;                   // prime-to-p part of a
    std::optional<long long> h;  // v_p(a) = h * p^k with p not dividing h
    std::optional<int> k;
    std::optional<int> w;        // v_p(a^(p-1) - 1), when p does not divide a
    int w0 = 0;                  // v_p(a0^(p-1) - 1)
    std::optional<int> c;        // min(w0 - 1, k, m), when p | a
    std::optional<long long> d0; // gcd(n0, h)
    std::optional<long long> d;  // gcd(n0, h (p - 1))
};
OddProfile profile_odd(const RadicalInput& in, long long p);

} // namespace radix

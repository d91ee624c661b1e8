#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "radix/arith.hpp"
#include "radix/newton.hpp"

namespace radix {

// A search ran out of candidates before finding a witness.
struct BudgetExhausted : std::runtime_error {
    long long attempts = 0;
    BudgetExhausted(const std::string& what, long long att)
        : std::runtime_error(what), attempts(att) {}
};

// The doubling family: n = 2^(2^N), a = 4n + 1.  2 splits into m+1 degree-1
// primes, one more than F_{2^N} has degree-1 monics, so 2 obstructs every
// N-generator order.  N <= 5 keeps the degree inside long long.
RadicalInput cnid_family(int N);

// Minimal-degree polynomial (degree p^N + 1) with p as a common N-index
// divisor: x^(p^N+1) + sum_i ell * p^(i(i+1)/2) * x^(p^N+1-i).  ell-Eisenstein;
// its x-polygon at p has p^N + 1 unit-length sides with integer slopes.
oracle::IntPoly pleasants_poly(long long p, int N, long long ell);

// Disc(x^n - a) = (-1)^((n^2-n)/2) * n^n * (-a)^(n-1).
BigInt disc_radical(long long n, const BigInt& a);

// Witness that Q(a^(1/n)) is non-monogenic by discriminant congruence yet has
// no common index divisors.
struct ExceptionalCertificate {
    long long n = 0;
    BigInt a;             // ell^2 * mm
    long long p = 0;      // the congruence witness prime, n | p - 1
    long long ell = 0;    // odd prime with ell^2 exactly dividing a
    long long mm = 0;     // squarefree cofactor
    long long xi = 0;     // generator of (Z/pZ)* used by the construction
    BigInt ell_pow_mod_p; // ell^(n-1) (odd n) or ell^n (even n) mod p, != 1
    BigInt disc_mod_p;    // Disc(x^n - a) mod p
    std::vector<std::string> checks; // each line re-verified arithmetically
};

struct DiscSearchHints {
    std::optional<long long> p;
    std::optional<long long> ell;
    std::optional<long long> m;
};

// Search for an exceptional field of degree n > 2.  Hinted values are
// verified rather than searched; seed skips that many earlier witnesses.
// Throws BudgetExhausted when the candidate budget runs out.
ExceptionalCertificate exceptional_disc_search(long long n, long long budget = 200000,
                                               const DiscSearchHints& hints = {},
                                               long long seed = 0);

// Multivariate polynomial in X_1..X_{n-1}: exponent vector -> coefficient.
using Monomial = std::vector<int>;
using IndexForm = std::map<Monomial, BigInt>;

struct IndexFormWitness {
    long long n = 0;
    long long p = 0;
    long long k = 0;
    BigInt c;                        // k^((n-1)(n-2)/2) mod p
    IndexForm reduced_form;          // c * X_1^(n(n-1)/2), the determinant mod p
    IndexForm full_form;             // the determinant over Z (n <= 7 only)
    bool full_matrix_checked = false; // full_form reduces mod p to reduced_form
    bool insolvable = false;         // c * X^(n(n-1)/2) = +-1 has no root mod p
};

// Index form of Q((p k^(n-1))^(1/n)) relative to the integral basis
// {1, p^(1/n) k^((n-1)/n), ...}, expanded as a determinant and reduced mod p.
// n is limited to [3, 7] to keep the expansion desk-scale.
IndexFormWitness index_form_mod_p(long long n, long long p, long long k);

// Search for (p, k) making the reduced index form c * X_1^(n(n-1)/2) = +-1
// insolvable mod p, so the field is non-monogenic; x^n - p k^(n-1) stays
// maximal at every prime dividing n, so there are no common index divisors.
IndexFormWitness exceptional_index_search(long long n, long long budget = 200000,
                                          long long seed = 0);

} // namespace radix

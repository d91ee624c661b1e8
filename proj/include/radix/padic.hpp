#pragma once

#include <string>
#include <vector>

#include "radix/newton.hpp"
#include "radix/numutil.hpp"
#include "radix/shape.hpp"

namespace radix::oracle {

long long default_precision(); // RADIX_PRECISION env var, default 64 digits

struct TruncatedPadic {
    BigInt p;
    long long precision = 0; // number of p-adic digits
    BigInt value;            // in [0, p^precision)

    TruncatedPadic() = default;
    TruncatedPadic(const BigInt& p_, long long prec, const BigInt& v);

    BigInt modulus() const { return bpow(p, precision); }
    TruncatedPadic add(const TruncatedPadic& o) const;
    TruncatedPadic sub(const TruncatedPadic& o) const;
    TruncatedPadic mul(const TruncatedPadic& o) const;
    // divide by p^k; value must be divisible, precision drops by k
    TruncatedPadic shift_down(long long k) const;
    TruncatedPadic truncate(long long prec) const;
    long long valuation() const; // capped at precision
    std::string str() const;
};

// Newton lifting of the approximate root r0; requires
// v_p(f(r0)) > 2 v_p(f'(r0)) at the working precision.
TruncatedPadic hensel_root(const IntPoly& f, const TruncatedPadic& r0, long long target_precision);

// Is the odd a0 a 2^t-th power in Z_2?  Decided by an iterated square-root
// chain; agrees with t <= max(0, v_2(a0-1) - 2).
bool two_power_test(const BigInt& a0, long long t, long long precision);

struct VelezReport {
    std::string case_label;
    bool irreducible = false;
    bool verified = false;       // product and shape both confirmed
    bool product_ok = false;     // factor product == x^(2^m) - a mod 2^precision
    bool degrees_ok = false;     // factor degrees match the shape's e*f multiset
    long long precision_used = 0;
    FactorShape shape;           // splitting of 2 in Q(a^(1/2^m))
    std::vector<IntPoly> factors; // coefficients reduced mod 2^precision
    std::string message;
};

// Reconstructs the explicit 2-adic factorization of x^(2^m) - a for the
// detected case and checks it against the polynomial and the ideal shape.
VelezReport verify_velez(int m, const BigInt& a, long long precision = default_precision());

} // namespace radix::oracle

#pragma once

#include <string>
#include <vector>

#include "radix/arith.hpp"
#include "radix/newton.hpp"
#include "radix/padic.hpp"
#include "radix/shape.hpp"

namespace radix {

struct SplitReport {
    std::string case_label; // leaf case, e.g. "2.III.ii", "2.IV.iii.4", "odd.IV"
    FactorShape shape;
    std::string mirrors; // the mirrored polynomial(s) and factoring field(s)
    std::vector<std::string> notes;
    bool reduced = false;    // an n-th power was stripped from the radicand
    BigInt removed_root = 1;
};

// Factorization shape of 2 in Q(a^(1/n)).
SplitReport split2(const RadicalInput& in);

// Factorization shape of an odd prime p in Q(a^(1/n)).
SplitReport split_odd(const RadicalInput& in, long long p);

// Dispatch on the parity of p.  p must be prime.
SplitReport split(const RadicalInput& in, const BigInt& p);

// Convenience entry point: strips n-th powers first and flags the reduction.
SplitReport split(long long n, const BigInt& a, const BigInt& p);

struct OracleAgreement {
    SplitReport report;            // closed-form result
    bool oracle_conclusive = false;
    bool agree = false;            // meaningful only when conclusive
    FactorShape oracle_shape;      // filled when conclusive
    std::string oracle_detail;
    bool velez_run = false;        // explicit 2-adic factor check on x^(2^m) - a
    bool velez_ok = false;
    std::string velez_label;
};

// Cross-check against the Newton polygon oracle.  A conclusive oracle shape
// that disagrees with the closed form is a hard error (both shapes printed);
// an inconclusive first dissection is recorded, not failed.  For even a with
// 2 | n and p = 2 the explicit 2-adic factorization of the 2-power subfield
// polynomial is verified as well.
OracleAgreement validate_against_oracle(const RadicalInput& in, const BigInt& p);

} // namespace radix

#pragma once

#include <map>
#include <string>
#include <vector>

#include "radix/arith.hpp"
#include "radix/shape.hpp"

namespace radix {

// residue degree f -> number of distinct primes of degree f above p
struct LambdaProfile {
    std::map<long long, long long> lambda;
};

LambdaProfile lambda_profile(const FactorShape& shape);

// Splitting criterion: p divides the index of every order with N ring
// generators iff some residue degree f carries more primes than there are
// monic irreducibles of degree f over F_{p^N}.
bool is_cnid(const FactorShape& shape, long long p, int N);

// Closed-form test evaluated from the radicand's profile alone, without
// computing the factor shape.  Independent of split(); the two must agree.
bool cnid_formula(const RadicalInput& in, long long p, int N);

// All primes p | n that divide every N-generator index.  Each verdict is
// cross-checked against the splitting criterion; disagreement throws.
std::vector<long long> common_index_divisors(const RadicalInput& in, int N);

struct GeneratorCount {
    long long generators = 1; // 1 + max_n
    long long max_n = 0;      // largest N for which some p | n obstructs
    std::string certainty;    // "exact (family)" or "certified-lower-bound"
};

// Ring generators needed for the maximal order, as certified by index-divisor
// obstructions.  Exact for the family n = 2^(2^N), a = 2^(2^N + 2) + 1; a
// lower bound otherwise (absence of obstructions does not prove monogenicity).
GeneratorCount min_generators(const RadicalInput& in);

} // namespace radix

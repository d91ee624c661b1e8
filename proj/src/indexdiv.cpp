#include "radix/indexdiv.hpp"

#include <stdexcept>

#include "radix/ffpoly.hpp"
#include "radix/splitting.hpp"

namespace radix {

namespace {

using Lambda = std::map<long long, long long>;

bool exceeds_irred(const Lambda& lam, const BigInt& q) {
    for (const auto& [f, c] : lam)
        if (c > ff::irred_count(f, q)) return true;
    return false;
}

Lambda scale(const Lambda& src, long long mult) {
    Lambda out;
    for (const auto& [f, c] : src) out[f] = mult * c;
    return out;
}

void merge(Lambda& dst, const Lambda& src) {
    for (const auto& [f, c] : src) dst[f] += c;
}

// degree-f prime counts contributed by a block factored over F_4: a factor of
// degree g yields a prime of absolute residue degree 2g
Lambda over_f4(const Lambda& counts4) {
    Lambda out;
    for (const auto& [g, c] : counts4) out[2 * g] += c;
    return out;
}

Lambda binom_fp(long long deg, const BigInt& c, long long p) {
    ff::FqField Fp((std::uint64_t)p, 1);
    return ff::binomial_distribution(deg, Fp.from_int(c), Fp).counts;
}

// the shared tower pattern: F_4 block plus w-2 unramified-field layers, or
// m+1 plain layers once the congruence depth exceeds the tower
bool tower_test(int w, int m, const Lambda& d2, const Lambda& d4, const BigInt& q) {
    if (w == 1) return false;
    if (w <= m + 1) {
        Lambda lam = over_f4(d4);
        merge(lam, scale(d2, w - 2));
        return exceeds_irred(lam, q);
    }
    return exceeds_irred(scale(d2, m + 1), q);
}

bool cnid2(const RadicalInput& in, int N) {
    TwoProfile pr = profile2(in);
    const BigInt q = bpow(2, N);
    const bool a_even = bmod(in.a, 2) == 0;
    if (!a_even && in.m == 0) return false;
    if (a_even && std::gcd(vp(in.a, 2), in.n) % 2 == 1) return false;
    if (!a_even) {
        return tower_test(*pr.w, in.m, ff::cyclotomic_distribution(in.n0, 2).counts,
                          ff::cyclotomic_distribution(in.n0, 4).counts, q);
    }
    const Lambda d2 = ff::cyclotomic_distribution(pr.d, 2).counts;
    const Lambda d4 = ff::cyclotomic_distribution(pr.d, 4).counts;
    const int k = *pr.k;
    const int w0 = pr.w0;
    const int t = pr.t;
    if (k >= in.m) return tower_test(w0, in.m, d2, d4, q);
    if (w0 == 1) {
        long long v1 = pr.a0 == -1 ? W_UNBOUNDED : vp(pr.a0 + 1, 2);
        if (v1 == 2 || k >= 2) return false; // mirrors a separable F_2 factorization
        if (N != 1) return false;
        if (v1 == 3) return exceeds_irred(over_f4(d4), 2);
        return exceeds_irred(scale(d2, 2), 2);
    }
    if (w0 == 2) return N == 1 && exceeds_irred(over_f4(d4), 2);
    // w0 >= 3, t = w0 - 2
    if (t == k && t == 1) return exceeds_irred(scale(d2, 2), q);
    if (t <= k) {
        Lambda lam = over_f4(d4);
        merge(lam, scale(d2, t));
        return exceeds_irred(lam, q);
    }
    if (in.m == 2) return N == 1 && exceeds_irred(scale(d2, 2), 2);
    if (k == 1) return exceeds_irred(scale(d2, 2), q);
    return exceeds_irred(scale(d2, k + 2), q);
}

bool cnid_odd(const RadicalInput& in, long long p, int N) {
    OddProfile pr = profile_odd(in, p);
    if (pr.m == 0) return false;
    const BigInt q = bpow(p, N);
    const bool p_div_a = bmod(in.a, p) == 0;
    if (p_div_a && vp(in.a, p) % p != 0) return false;
    if (!p_div_a) {
        long long mult = std::min<long long>(*pr.w, pr.m + 1);
        return exceeds_irred(scale(binom_fp(pr.n0, in.a, p), mult), q);
    }
    BigInt sign_a0 = (*pr.h % 2 == 0) ? pr.a0 : -pr.a0;
    Lambda lam = binom_fp(*pr.d0, pr.a0, p);
    merge(lam, scale(binom_fp(*pr.d, sign_a0, p), *pr.c));
    return exceeds_irred(lam, q);
}

// n = 2^(2^j), a = 2^(2^j + 2) + 1 is the one family with a proven matching
// upper bound on the generator count
bool in_certified_family(const RadicalInput& in) {
    if (in.n0 != 1 || in.m < 2) return false;
    long long e = in.m;
    if ((e & (e - 1)) != 0) return false; // m must itself be a power of two
    return in.a == BigInt(4) * in.n + 1;
}

} // namespace

LambdaProfile lambda_profile(const FactorShape& shape) {
    LambdaProfile out;
    for (const auto& en : shape.entries) out.lambda[en.f] += en.count;
    if (out.lambda.empty()) throw std::invalid_argument("lambda_profile: empty shape");
    return out;
}

bool is_cnid(const FactorShape& shape, long long p, int N) {
    if (N < 1) throw std::invalid_argument("is_cnid: N must be positive");
    return exceeds_irred(lambda_profile(shape).lambda, bpow(p, N));
}

bool cnid_formula(const RadicalInput& in, long long p, int N) {
    if (N < 1) throw std::invalid_argument("cnid_formula: N must be positive");
    if (p == 2) return cnid2(in, N);
    return cnid_odd(in, p, N);
}

std::vector<long long> common_index_divisors(const RadicalInput& in, int N) {
    std::vector<long long> out;
    for (long long p : prime_divisors(in.n)) {
        bool formula = cnid_formula(in, p, N);
        bool pleasants = is_cnid(split(in, p).shape, p, N);
        if (formula != pleasants)
            throw std::logic_error("index-divisor paths disagree at n=" + std::to_string(in.n) +
                                   ", a=" + in.a.str() + ", p=" + std::to_string(p) +
                                   ", N=" + std::to_string(N));
        if (formula) out.push_back(p);
    }
    return out;
}

GeneratorCount min_generators(const RadicalInput& in) {
    GeneratorCount out;
    long long maxN = 0;
    // obstructions are monotone in N, and die out once p^N >= n for every
    // p | n (there are at most n/f primes of degree f, bounded by Irred)
    for (int N = 1; bpow(2, N) < in.n; ++N) {
        bool any = false;
        for (long long p : prime_divisors(in.n))
            if (cnid_formula(in, p, N)) any = true;
        if (!any) break;
        maxN = N;
    }
    out.max_n = maxN;
    out.generators = maxN + 1;
    out.certainty = in_certified_family(in) ? "exact (family)" : "certified-lower-bound";
    return out;
}

} // namespace radix

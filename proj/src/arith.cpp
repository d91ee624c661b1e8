#include "radix/arith.hpp"

#include <cmath>

namespace radix {

long long vp(const BigInt& x, const BigInt& p) {
    if (x == 0) throw std::invalid_argument("vp: x must be nonzero");
    if (p < 2 || !is_probable_prime(p)) throw std::invalid_argument("vp: p must be prime");
    BigInt y = x;
    long long v = 0;
    while (y % p == 0) {
        y /= p;
        ++v;
    }
    return v;
}

namespace {

// Certified factorization a = sign * prod q_i^{v_i}.  Trial division up to
// `bound`, then the leftover cofactor is resolved as 1, a prime, or a perfect
// prime power.  A composite non-power cofactor is squarefree whenever it is
// at most bound^3; beyond that we refuse rather than guess.
std::vector<std::pair<BigInt, long long>> certified_factor(BigInt a, long long bound) {
    std::vector<std::pair<BigInt, long long>> fac;
    if (a < 0) a = -a;
    if (a <= 1) return fac;
    auto strip = [&](const BigInt& q) {
        long long v = 0;
        while (a % q == 0) {
            a /= q;
            ++v;
        }
        if (v > 0) fac.push_back({q, v});
    };
    strip(2);
    strip(3);
    for (long long q = 5; q <= bound && BigInt(q) * q <= a; q += 6) {
        strip(q);
        strip(q + 2);
    }
    if (a == 1) return fac;
    if (is_probable_prime(a)) {
        fac.push_back({a, 1});
        return fac;
    }
    // perfect power check: a = d^j with d prime
    long long maxj = (long long)(boost::multiprecision::msb(a)) + 1;
    for (long long j = maxj; j >= 2; --j) {
        BigInt d;
        if (exact_root(a, j, d) && is_probable_prime(d)) {
            fac.push_back({d, j});
            return fac;
        }
    }
    // composite, not a prime power: squarefree iff no q^2 r with q > bound fits
    if (a > BigInt(bound) * bound * bound)
        throw std::runtime_error("power_free_reduce: cofactor too large to certify; raise trial bound");
    fac.push_back({a, 1}); // squarefree composite, treat as a unit block of exponent 1
    return fac;
}

} // namespace

std::pair<BigInt, BigInt> power_free_reduce(const BigInt& a, long long n, long long trial_bound) {
    if (a == 0 || n < 1) throw std::invalid_argument("power_free_reduce: need a != 0, n >= 1");
    auto fac = certified_factor(a, trial_bound);
    BigInt b = 1;
    for (const auto& [q, v] : fac) b *= bpow(q, v / n);
    BigInt bn = bpow(b, n);
    return {a / bn, b};
}

bool is_irreducible_radical(long long n, const BigInt& a) {
    if (n < 1 || a == 0) throw std::invalid_argument("is_irreducible_radical: need n >= 1, a != 0");
    if (n == 1) return true;
    for (long long q : prime_divisors(n)) {
        BigInt r;
        if (exact_root(a, q, r)) return false;
    }
    if (n % 4 == 0) {
        // a = -4 c^4 makes x^n - a reducible
        if (a < 0 && (-a) % 4 == 0) {
            BigInt c;
            if (exact_root((-a) / 4, 4, c)) return false;
        }
    }
    return true;
}

RadicalInput RadicalInput::make(long long n, const BigInt& a) {
    if (n < 2) throw std::invalid_argument("RadicalInput: n must be at least 2");
    if (a == 0) throw std::invalid_argument("RadicalInput: a must be nonzero");
    if (!is_irreducible_radical(n, a))
        throw std::invalid_argument("RadicalInput: x^n - a is reducible over Q");
    RadicalInput in;
    in.n = n;
    in.a = a;
    in.m = 0;
    long long n0 = n;
    while (n0 % 2 == 0) {
        n0 /= 2;
        ++in.m;
    }
    in.n0 = n0;
    return in;
}

NormalizedInput normalize_input(long long n, const BigInt& a) {
    if (n < 2 || a == 0) throw std::invalid_argument("normalize_input: need n >= 2, a != 0");
    auto [afree, root] = power_free_reduce(a, n);
    (void)afree;
    NormalizedInput out;
    out.reduced = (root != 1 && root != -1);
    out.removed_root = root;
    out.input = RadicalInput::make(n, a);
    return out;
}

TwoProfile profile2(const RadicalInput& in) {
    TwoProfile pr;
    long long v = vp(in.a, 2);
    pr.a0 = in.a / bpow(2, v);
    if (v > 0) {
        int k = 0;
        long long h = v;
        while (h % 2 == 0) {
            h /= 2;
            ++k;
        }
        pr.h = h;
        pr.k = k;
        pr.d = std::gcd(h, in.n0);
    } else {
        pr.w = (int)vp(in.a - 1, 2);
        pr.d = in.n0;
    }
    pr.w0 = pr.a0 == 1 ? W_UNBOUNDED : (int)vp(pr.a0 - 1, 2);
    pr.t = pr.w0 > 2 ? pr.w0 - 2 : 0;
    return pr;
}

OddProfile profile_odd(const RadicalInput& in, long long p) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(BigInt(p)))
        throw std::invalid_argument("profile_odd: p must be an odd prime");
    OddProfile pr;
    pr.p = p;
    long long n0 = in.n;
    int m = 0;
    while (n0 % p == 0) {
        n0 /= p;
        ++m;
    }
    pr.m = m;
    pr.n0 = n0;
    long long v = vp(in.a, p);
    pr.a0 = in.a / bpow(p, v);
    BigInt u0 = bpow(pr.a0, p - 1);
    pr.w0 = u0 == 1 ? W_UNBOUNDED : (int)vp(u0 - 1, p);
    if (v > 0) {
        int k = 0;
        long long h = v;
        while (h % p == 0) {
            h /= p;
            ++k;
        }
        pr.h = h;
        pr.k = k;
        pr.c = std::min<long long>({(long long)pr.w0 - 1, (long long)k, (long long)m});
        pr.d0 = std::gcd(n0, h);
        pr.d = std::gcd(n0, h * (p - 1));
    } else {
        BigInt u = bpow(in.a, p - 1);
        pr.w = u == 1 ? W_UNBOUNDED : (int)vp(u - 1, p);
    }
    return pr;
}

} // namespace radix

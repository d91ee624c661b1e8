#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace radix {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bpow(BigInt base, long long exp) {
    if (exp < 0) throw std::invalid_argument("bpow: negative exponent");
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt bgcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

// mathematical mod: result in [0, m)
inline BigInt bmod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

// floor of the k-th root of a >= 0
inline BigInt iroot(const BigInt& a, long long k) {
    if (a < 0 || k < 1) throw std::invalid_argument("iroot: bad arguments");
    if (a == 0 || a == 1 || k == 1) return a;
    BigInt lo = 0, hi = 1;
    while (bpow(hi, k) <= a) hi <<= 1;
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) >> 1;
        if (bpow(mid, k) <= a) lo = mid; else hi = mid;
    }
    return lo;
}

// exact k-th root of (possibly negative) a, if it exists
inline bool exact_root(const BigInt& a, long long k, BigInt& out) {
    if (a < 0) {
        if (k % 2 == 0) return false;
        BigInt r;
        if (!exact_root(-a, k, r)) return false;
        out = -r;
        return true;
    }
    BigInt r = iroot(a, k);
    if (bpow(r, k) == a) { out = r; return true; }
    return false;
}

inline std::vector<long long> prime_divisors(long long n) {
    if (n < 1) throw std::invalid_argument("prime_divisors: n must be positive");
    std::vector<long long> out;
    for (long long q = 2; q * q <= n; q == 2 ? q = 3 : q += 2) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::vector<long long> divisors(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline long long euler_phi(long long n) {
    long long r = n;
    for (long long q : prime_divisors(n)) r -= r / q;
    return r;
}

inline int moebius(long long n) {
    int sign = 1;
    for (long long q = 2; q * q <= n; q == 2 ? q = 3 : q += 2) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

inline long long mul_order(long long a, long long mod) {
    if (mod == 1) return 1;
    a %= mod;
    if (a < 0) a += mod;
    if (std::gcd(a, mod) != 1) throw std::invalid_argument("mul_order: not a unit");
    long long cur = a % mod, ord = 1;
    while (cur != 1) {
        cur = (long long)((__int128)cur * a % mod);
        ++ord;
        if (ord > mod) throw std::logic_error("mul_order: did not terminate");
    }
    return ord;
}

} // namespace radix

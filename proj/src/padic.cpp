#include "radix/padic.hpp"

#include <cstdlib>
#include <set>

#include "radix/arith.hpp"

namespace radix::oracle {

long long default_precision() {
    if (const char* env = std::getenv("RADIX_PRECISION")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 8) return v;
        throw std::runtime_error("RADIX_PRECISION must be an integer >= 8");
    }
    return 64;
}

TruncatedPadic::TruncatedPadic(const BigInt& p_, long long prec, const BigInt& v) {
    if (prec < 1) throw std::invalid_argument("TruncatedPadic: precision must be positive");
    p = p_;
    precision = prec;
    value = bmod(v, bpow(p_, prec));
}

static void require_compatible(const TruncatedPadic& a, const TruncatedPadic& b) {
    if (a.p != b.p) throw std::invalid_argument("TruncatedPadic: mixed primes");
}

TruncatedPadic TruncatedPadic::add(const TruncatedPadic& o) const {
    require_compatible(*this, o);
    long long prec = std::min(precision, o.precision);
    return TruncatedPadic(p, prec, value + o.value);
}

TruncatedPadic TruncatedPadic::sub(const TruncatedPadic& o) const {
    require_compatible(*this, o);
    long long prec = std::min(precision, o.precision);
    return TruncatedPadic(p, prec, value - o.value);
}

TruncatedPadic TruncatedPadic::mul(const TruncatedPadic& o) const {
    require_compatible(*this, o);
    long long prec = std::min(precision, o.precision);
    return TruncatedPadic(p, prec, value * o.value);
}

TruncatedPadic TruncatedPadic::shift_down(long long k) const {
    if (k < 0 || k >= precision) throw std::invalid_argument("shift_down: bad shift");
    BigInt pk = bpow(p, k);
    if (value % pk != 0) throw std::domain_error("shift_down: value not divisible by p^k");
    return TruncatedPadic(p, precision - k, value / pk);
}

TruncatedPadic TruncatedPadic::truncate(long long prec) const {
    if (prec > precision) throw std::invalid_argument("truncate: cannot raise precision");
    return TruncatedPadic(p, prec, value);
}

long long TruncatedPadic::valuation() const {
    if (value == 0) return precision;
    return vp(value, p);
}

std::string TruncatedPadic::str() const {
    return value.str() + " mod " + p.str() + "^" + std::to_string(precision);
}

namespace {

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = bmod(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: not invertible");
    return bmod(old_s, m);
}

long long capped_vp(const BigInt& x, const BigInt& p, long long cap) {
    if (x == 0) return cap;
    long long v = vp(x, p);
    return std::min(v, cap);
}

} // namespace

TruncatedPadic hensel_root(const IntPoly& f, const TruncatedPadic& r0, long long target_precision) {
    if (target_precision < 1) throw std::invalid_argument("hensel_root: bad target precision");
    const BigInt& p = r0.p;
    IntPoly df = ideriv(f);
    BigInt M0 = r0.modulus();
    BigInt d0 = bmod(ieval(df, r0.value), M0);
    long long nu = capped_vp(d0, p, r0.precision);
    long long tau = capped_vp(bmod(ieval(f, r0.value), M0), p, r0.precision);
    if (tau <= 2 * nu) throw std::runtime_error("not Hensel-liftable");
    long long W = target_precision + 2 * nu + 2;
    BigInt M = bpow(p, W);
    BigInt target_mod = bpow(p, target_precision);
    BigInt pnu = bpow(p, nu);
    BigInt r = bmod(r0.value, M);
    for (int iter = 0; iter < 200; ++iter) {
        BigInt t = bmod(ieval(f, r), M);
        if (t % target_mod == 0) return TruncatedPadic(p, target_precision, r);
        BigInt d = bmod(ieval(df, r), M);
        if (d % pnu != 0 || capped_vp(d, p, W) != nu)
            throw std::runtime_error("hensel_root: derivative valuation drifted");
        if (t % pnu != 0) throw std::runtime_error("hensel_root: lifting step failed");
        BigInt Mred = bpow(p, W - nu);
        BigInt q = bmod((t / pnu) * mod_inverse(d / pnu, Mred), Mred);
        r = bmod(r - q, M);
    }
    throw std::runtime_error("hensel_root: did not converge");
}

namespace {

// square root chain in Z_2: each step replaces cur by the root of x^2 = cur
// congruent to 1 mod 4, losing one digit of precision
BigInt sqrt_chain(BigInt cur, long long steps, long long& prec, bool* failed = nullptr) {
    for (long long s = 0; s < steps; ++s) {
        if (prec < 4) throw std::runtime_error("insufficient precision");
        if (bmod(cur, 8) != 1) {
            if (failed) {
                *failed = true;
                return cur;
            }
            throw std::runtime_error("sqrt_chain: argument is not a square in Z_2");
        }
        IntPoly f{-cur, 0, 1};
        TruncatedPadic r = hensel_root(f, TruncatedPadic(2, prec, 1), prec - 1);
        cur = r.value;
        prec -= 1;
    }
    if (failed) *failed = false;
    return cur;
}

} // namespace

bool two_power_test(const BigInt& a0, long long t, long long precision) {
    if (a0 % 2 == 0) throw std::invalid_argument("two_power_test: a0 must be odd");
    if (t < 0) throw std::invalid_argument("two_power_test: t must be non-negative");
    if (t == 0) return true;
    if (precision < t + 3) throw std::runtime_error("insufficient precision");
    long long prec = precision;
    BigInt cur = bmod(a0, bpow(2, prec));
    bool failed = false;
    sqrt_chain(cur, t, prec, &failed);
    return !failed;
}

namespace {

IntPoly reduce_poly(const IntPoly& f, const BigInt& mod) {
    IntPoly r = f;
    for (auto& c : r) c = bmod(c, mod);
    return r;
}

// x^deg + lead_shift (sparse binomial/trinomial builders, coefficients mod 2^prec)
IntPoly sparse_poly(long long deg, std::initializer_list<std::pair<long long, BigInt>> terms) {
    IntPoly f(deg + 1, 0);
    f[deg] = 1;
    for (auto& [i, c] : terms) f[i] += c;
    return f;
}

struct VelezCase {
    std::string label;
    bool irreducible = false;
    FactorShape shape;
    std::vector<IntPoly> factors;
    std::string note;
};

BigInt pow2exp(long long e) { return bpow(2, e); } // 2^e

// a odd; factors of x^(2^m) - a over Z_2 at working precision wp
VelezCase velez_odd(int m, const BigInt& a, long long wp, long long& prec_left) {
    VelezCase out;
    long long n = 1LL << m;
    int w = (int)vp(a - 1, 2);
    BigInt M = bpow(2, wp);
    if (w == 1) {
        out.label = "odd.i";
        out.irreducible = true;
        out.shape.add(n, 1, 1);
        out.note = "irreducible, totally ramified";
        out.factors.push_back(reduce_poly(sparse_poly(n, {{0, -a}}), M));
        prec_left = wp;
        return out;
    }
    if (w == 2) {
        out.label = "odd.ii";
        out.irreducible = true;
        out.shape.add(n / 2, 2, 1);
        out.note = "irreducible, inert step of degree 2";
        out.factors.push_back(reduce_poly(sparse_poly(n, {{0, -a}}), M));
        prec_left = wp;
        return out;
    }
    long long prec = wp;
    if (w <= m + 1) {
        out.label = "odd.ii";
        long long steps = w - 2; // a = alpha^(2^(w-2))
        BigInt alpha = sqrt_chain(bmod(a, bpow(2, prec)), steps, prec);
        BigInt Mp = bpow(2, prec);
        long long d0 = 1LL << (m - w + 2);
        out.factors.push_back(reduce_poly(sparse_poly(d0, {{0, -alpha}}), Mp));
        out.factors.push_back(reduce_poly(sparse_poly(d0, {{0, alpha}}), Mp));
        BigInt apow = alpha;
        for (int i = 1; i <= w - 3; ++i) {
            apow = bmod(apow * apow, Mp);
            out.factors.push_back(reduce_poly(sparse_poly(d0 << i, {{0, apow}}), Mp));
        }
        out.shape.add(1LL << (m - w + 1), 2, 1);
        for (int i = 2; i <= w - 1; ++i) out.shape.add(1LL << (m - w + i), 1, 1);
        prec_left = prec;
        return out;
    }
    out.label = "odd.iii";
    BigInt alpha = sqrt_chain(bmod(a, bpow(2, prec)), m, prec);
    BigInt Mp = bpow(2, prec);
    out.factors.push_back(reduce_poly(sparse_poly(1, {{0, -alpha}}), Mp));
    out.factors.push_back(reduce_poly(sparse_poly(1, {{0, alpha}}), Mp));
    BigInt apow = alpha;
    for (int i = 1; i <= m - 1; ++i) {
        apow = bmod(apow * apow, Mp);
        out.factors.push_back(reduce_poly(sparse_poly(1LL << i, {{0, apow}}), Mp));
    }
    out.shape.add(1, 1, 2);
    for (int i = 2; i <= m; ++i) out.shape.add(1LL << (i - 1), 1, 1);
    prec_left = prec;
    return out;
}

VelezCase velez_even(int m, const BigInt& a, long long wp, long long& prec_left);

// k >= m: substitute x = 2^(h 2^(k-m)) y and reuse the odd-a case on a0
VelezCase velez_scaled(int m, const BigInt& a0, long long h, int k, long long wp, long long& prec_left) {
    long long inner_prec = 0;
    VelezCase inner = velez_odd(m, a0, wp + (h << (k - m)) * (1LL << m), inner_prec);
    VelezCase out;
    out.label = "even.IV0(" + inner.label + ")";
    out.irreducible = inner.irreducible;
    out.shape = inner.shape;
    out.note = "reduced to the odd case by the substitution x -> x / 2^(h*2^(k-m))";
    long long scale_exp = h << (k - m); // scaling unit 2^(h 2^(k-m))
    long long avail = inner_prec;
    BigInt Mp = bpow(2, avail);
    for (const auto& g : inner.factors) {
        long long dg = ideg(g);
        IntPoly s(dg + 1, 0);
        for (long long i = 0; i <= dg; ++i)
            s[i] = bmod(g[i] * bpow(2, scale_exp * (dg - i)), Mp);
        out.factors.push_back(s);
    }
    prec_left = avail;
    return out;
}

VelezCase velez_even(int m, const BigInt& a, long long wp, long long& prec_left) {
    VelezCase out;
    long long n = 1LL << m;
    long long v = vp(a, 2);
    BigInt a0 = a / pow2exp(v);
    int k = 0;
    long long h = v;
    while (h % 2 == 0) {
        h /= 2;
        ++k;
    }
    BigInt M = bpow(2, wp);
    prec_left = wp;
    if (k == 0) {
        out.label = "even.Eisenstein";
        out.irreducible = true;
        out.shape.add(n, 1, 1);
        out.note = "2-Eisenstein, totally ramified";
        out.factors.push_back(reduce_poly(sparse_poly(n, {{0, -a}}), M));
        return out;
    }
    if (k >= m) return velez_scaled(m, a0, h, k, wp, prec_left);
    int w0 = (int)vp(a0 - 1, 2);
    int t = w0 > 2 ? w0 - 2 : 0;
    if (w0 == 1) {
        int v1 = (int)vp(a0 + 1, 2);
        if (v1 == 2 || (v1 >= 3 && k >= 2)) {
            out.label = v1 == 2 ? "even.I.1" : "even.I.2";
            out.irreducible = true;
            out.shape.add(n, 1, 1);
            out.factors.push_back(reduce_poly(sparse_poly(n, {{0, -a}}), M));
            return out;
        }
        if (v1 == 3) { // k == 1
            out.label = "even.I.3";
            out.irreducible = true;
            out.shape.add(n / 2, 2, 1);
            out.factors.push_back(reduce_poly(sparse_poly(n, {{0, -a}}), M));
            return out;
        }
        // v1 >= 4, k == 1: beta^4 = -a0
        long long prec = wp;
        BigInt beta = sqrt_chain(bmod(-a0, bpow(2, prec)), 2, prec);
        BigInt Mp = bpow(2, prec);
        BigInt b2 = bmod(beta * beta, Mp);
        out.label = "even.I.4";
        out.shape.add(n / 2, 1, 2);
        out.factors.push_back(reduce_poly(
            sparse_poly(n / 2, {{n / 4, 2 * beta}, {0, 2 * b2}}), Mp));
        out.factors.push_back(reduce_poly(
            sparse_poly(n / 2, {{n / 4, -2 * beta}, {0, 2 * b2}}), Mp));
        prec_left = prec;
        return out;
    }
    if (w0 == 2) {
        out.label = "even.II";
        out.irreducible = true;
        out.shape.add(n / 2, 2, 1);
        out.factors.push_back(reduce_poly(sparse_poly(n, {{0, -a}}), M));
        return out;
    }
    // w0 >= 3, alpha^(2^t) = a0
    long long prec = wp;
    BigInt alpha = sqrt_chain(bmod(a0, bpow(2, prec)), t, prec);
    BigInt Mp = bpow(2, prec);
    auto alpha_pow2 = [&](long long i) { // alpha^(2^i) mod 2^prec
        BigInt r = alpha;
        for (long long j = 0; j < i; ++j) r = bmod(r * r, Mp);
        return r;
    };
    prec_left = prec;
    if (t < k) {
        out.label = "even.III.1";
        long long d0 = 1LL << (m - t);
        out.factors.push_back(reduce_poly(
            sparse_poly(d0, {{0, -pow2exp(1LL << (k - t)) * alpha}}), Mp));
        for (int i = 0; i <= t - 1; ++i)
            out.factors.push_back(reduce_poly(
                sparse_poly(d0 << i, {{0, pow2exp(1LL << (k - t + i)) * alpha_pow2(i)}}), Mp));
        out.shape.add(1LL << (m - t - 1), 2, 1);
        for (int i = 1; i <= t; ++i) out.shape.add(1LL << (m - t - 1 + i), 1, 1);
        return out;
    }
    if (t == k) {
        out.label = "even.III.2";
        long long d0 = 1LL << (m - t);
        out.factors.push_back(reduce_poly(sparse_poly(d0, {{0, -2 * alpha}}), Mp));
        for (int i = 0; i <= t - 1; ++i)
            out.factors.push_back(reduce_poly(
                sparse_poly(d0 << i, {{0, pow2exp(1LL << i) * alpha_pow2(i)}}), Mp));
        if (t == 1) {
            out.shape.add(1LL << (m - 1), 1, 2);
        } else {
            out.shape.add(1LL << (m - t), 1, 2);
            out.shape.add(1LL << (m - t), 2, 1);
            for (int i = 3; i <= t; ++i) out.shape.add(1LL << (m - t + i - 1), 1, 1);
        }
        return out;
    }
    // t >= k + 1
    if (m == 2) { // forces k == 1
        out.label = "even.III.3";
        BigInt ap = alpha_pow2(t - 1);
        out.factors.push_back(reduce_poly(sparse_poly(2, {{0, -2 * ap}}), Mp));
        out.factors.push_back(reduce_poly(sparse_poly(2, {{0, 2 * ap}}), Mp));
        out.shape.add(2, 1, 2);
        return out;
    }
    if (k == 1) {
        // the general display collapses: only the two leading factors survive
        out.label = "even.III.4(k=1)";
        BigInt ap = alpha_pow2(t - 1);
        long long d0 = 1LL << (m - 1);
        out.factors.push_back(reduce_poly(sparse_poly(d0, {{0, -2 * ap}}), Mp));
        out.factors.push_back(reduce_poly(sparse_poly(d0, {{0, 2 * ap}}), Mp));
        out.shape.add(d0, 1, 2);
        return out;
    }
    out.label = "even.III.4";
    long long d0 = 1LL << (m - k);
    BigInt atk = alpha_pow2(t - k);
    BigInt atk1 = alpha_pow2(t - k - 1);
    out.factors.push_back(reduce_poly(sparse_poly(d0, {{0, -2 * atk}}), Mp));
    out.factors.push_back(reduce_poly(sparse_poly(d0, {{0, 2 * atk}}), Mp));
    out.factors.push_back(reduce_poly(
        sparse_poly(d0, {{d0 / 2, -2 * atk1}, {0, 2 * atk}}), Mp));
    out.factors.push_back(reduce_poly(
        sparse_poly(d0, {{d0 / 2, 2 * atk1}, {0, 2 * atk}}), Mp));
    for (int i = 2; i <= k - 1; ++i)
        out.factors.push_back(reduce_poly(
            sparse_poly(d0 << i, {{0, pow2exp(1LL << i) * alpha_pow2(t - k + i)}}), Mp));
    out.shape.add(d0, 1, 4);
    for (int i = 3; i <= k; ++i) out.shape.add(1LL << (m - k + i - 1), 1, 1);
    return out;
}

} // namespace

VelezReport verify_velez(int m, const BigInt& a, long long precision) {
    if (m < 1) throw std::invalid_argument("verify_velez: m must be positive");
    if (precision < 8) throw std::invalid_argument("verify_velez: precision too small");
    long long n = 1LL << m;
    if (a == 0 || !is_irreducible_radical(n, a))
        throw std::invalid_argument("verify_velez: x^(2^m) - a must be irreducible over Q");
    VelezReport rep;
    for (int attempt = 0; attempt < 3; ++attempt) {
        long long wp = precision << attempt;
        long long headroom = wp + n + 8; // sqrt chains and products eat digits
        long long prec_left = headroom;
        VelezCase vc = a % 2 == 0 ? velez_even(m, a, headroom, prec_left)
                                  : velez_odd(m, a, headroom, prec_left);
        long long check_prec = std::min(wp, prec_left);
        BigInt M = bpow(2, check_prec);
        IntPoly prod{1};
        for (const auto& g : vc.factors) prod = reduce_poly(imul(prod, g), M);
        IntPoly target = reduce_poly(sparse_poly(n, {{0, -a}}), M);
        rep.case_label = vc.label;
        rep.irreducible = vc.irreducible;
        rep.shape = vc.shape;
        rep.shape.canonicalize();
        rep.factors = vc.factors;
        rep.precision_used = check_prec;
        rep.product_ok = (prod == target);
        std::multiset<long long> fac_degs, shape_degs;
        for (const auto& g : vc.factors) fac_degs.insert(ideg(g));
        for (const auto& en : rep.shape.entries)
            for (long long i = 0; i < en.count; ++i) shape_degs.insert(en.e * en.f);
        rep.degrees_ok = (fac_degs == shape_degs);
        rep.verified = rep.product_ok && rep.degrees_ok;
        rep.message = vc.note.empty() ? (rep.verified ? "verified" : "mismatch") : vc.note;
        if (rep.verified) return rep;
    }
    rep.message = "verification failed: " + rep.case_label +
                  (rep.product_ok ? "" : " product mismatch") +
                  (rep.degrees_ok ? "" : " degree multiset mismatch");
    return rep;
}

} // namespace radix::oracle

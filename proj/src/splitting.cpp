#include "radix/splitting.hpp"

#include <sstream>
#include <stdexcept>

#include "radix/ffpoly.hpp"

namespace radix {

namespace {

// degree -> factor count of x^d - 1 over F_2 (d odd)
std::map<long long, long long> unity_f2(long long d) {
    return ff::cyclotomic_distribution(d, 2).counts;
}

// degree -> factor count of x^d - 1 over F_4 (degrees are over F_4)
std::map<long long, long long> unity_f4(long long d) {
    return ff::cyclotomic_distribution(d, 4).counts;
}

// degree -> factor count of x^deg - c over F_p, c nonzero mod p
std::map<long long, long long> binom_fp(long long deg, const BigInt& c, long long p) {
    ff::FqField Fp((std::uint64_t)p, 1);
    return ff::binomial_distribution(deg, Fp.from_int(c), Fp).counts;
}

// shared layer pattern for 2.III and 2.IV.0: F_4 block plus F_2 layers,
// everything scaled by mult
void two_layers(FactorShape& sh, int m, int w, long long mult, long long d,
                std::vector<std::string>& notes) {
    if (w == 1) {
        for (auto& [f, c] : unity_f2(d)) sh.add(mult << m, f, c);
        return;
    }
    if (w <= m + 1) {
        long long e4 = mult << (m - w + 1);
        for (auto& [f, c] : unity_f4(d)) sh.add(e4, 2 * f, c);
        if (w == 2) notes.push_back("quadratic-residue-field block only: layer product is empty at w = 2");
        for (int l = 2; l <= w - 1; ++l) {
            long long e2 = mult << (m - w + l);
            for (auto& [f, c] : unity_f2(d)) sh.add(e2, f, c);
        }
        return;
    }
    for (int l = 1; l <= m + 1; ++l) {
        long long e2 = mult << std::max(l - 2, 0);
        for (auto& [f, c] : unity_f2(d)) sh.add(e2, f, c);
    }
}

std::string poly_desc(long long d, const BigInt& c) {
    std::ostringstream os;
    os << "x^" << d << " - " << c.str();
    return os.str();
}

} // namespace

SplitReport split2(const RadicalInput& in) {
    SplitReport rep;
    const long long n = in.n;
    const int m = in.m;
    const long long n0 = in.n0;
    TwoProfile pr = profile2(in);
    const bool a_even = bmod(in.a, 2) == 0;

    if (!a_even && m == 0) {
        // n and a both odd: unramified, mirrors x^n - a over F_2
        rep.case_label = "2.I";
        rep.mirrors = poly_desc(n, in.a) + " over F_2";
        for (auto& [f, c] : binom_fp(n, in.a, 2)) rep.shape.add(1, f, c);
    } else if (a_even && std::gcd(vp(in.a, 2), n) % 2 == 1) {
        rep.case_label = "2.II";
        long long g = std::gcd(vp(in.a, 2), n);
        rep.mirrors = poly_desc(g, 1) + " over F_2";
        for (auto& [f, c] : unity_f2(g)) rep.shape.add(n / g, f, c);
    } else if (!a_even) {
        // 2 | n, a odd
        int w = *pr.w;
        rep.mirrors = poly_desc(n0, 1) + " over F_2 and F_4";
        if (w == 1)
            rep.case_label = "2.III.i";
        else if (w <= m + 1)
            rep.case_label = "2.III.ii";
        else
            rep.case_label = "2.III.iii";
        two_layers(rep.shape, m, w, 1, n0, rep.notes);
    } else {
        // 2 | a and 2 | gcd(v2(a), n): v2(a) = h 2^k, h odd, k >= 1, m >= 1
        const int k = *pr.k;
        const int w0 = pr.w0;
        const int t = pr.t;
        const long long d = pr.d;
        const long long mult = n0 / d;
        {
            std::ostringstream os;
            os << poly_desc(d, 1) << " over F_2";
            rep.mirrors = os.str();
        }
        auto f2 = unity_f2(d);
        auto f4 = unity_f4(d);
        if (k >= m) {
            // the 2-power subfield only sees the odd part a0
            if (w0 == 1) {
                rep.case_label = "2.IV.0.1";
            } else if (w0 <= m + 1) {
                rep.case_label = "2.IV.0.2";
                rep.mirrors += " and F_4";
            } else {
                rep.case_label = "2.IV.0.3";
            }
            two_layers(rep.shape, m, w0, mult, d, rep.notes);
        } else if (w0 == 1) {
            long long v1 = pr.a0 == -1 ? W_UNBOUNDED : vp(pr.a0 + 1, 2);
            if (v1 == 2 || (v1 >= 3 && k >= 2)) {
                rep.case_label = "2.IV.i.1";
                for (auto& [f, c] : f2) rep.shape.add(mult << m, f, c);
            } else if (v1 == 3) { // k == 1
                rep.case_label = "2.IV.i.2";
                rep.mirrors = poly_desc(d, 1) + " over F_4";
                for (auto& [f, c] : f4) rep.shape.add(mult << (m - 1), 2 * f, c);
            } else { // v1 >= 4, k == 1
                rep.case_label = "2.IV.i.3";
                for (auto& [f, c] : f2) rep.shape.add(mult << (m - 1), f, 2 * c);
            }
        } else if (w0 == 2) {
            rep.case_label = "2.IV.ii";
            rep.mirrors = poly_desc(d, 1) + " over F_4";
            for (auto& [f, c] : f4) rep.shape.add(mult << (m - 1), 2 * f, c);
        } else { // w0 >= 3, t = w0 - 2 >= 1, 1 <= k <= m - 1
            if (t < k) {
                rep.case_label = "2.IV.iii.1";
                rep.mirrors += " and F_4";
                for (auto& [f, c] : f4) rep.shape.add(mult << (m - t - 1), 2 * f, c);
                for (int l = 1; l <= t; ++l)
                    for (auto& [f, c] : f2) rep.shape.add(mult << (m - t + l - 1), f, c);
            } else if (t == k) {
                rep.case_label = "2.IV.iii.2";
                if (t == 1) {
                    // the exponent pattern degenerates: two copies per factor
                    // and no quartic-residue-field block (checked against the
                    // explicit 2-adic factorization x^(2^(m-1)) -+ 2*sqrt(a0'))
                    rep.notes.push_back("t = 1 degenerate pattern: two unramified-layer copies, no F_4 block");
                    for (auto& [f, c] : f2) rep.shape.add(mult << (m - 1), f, 2 * c);
                } else {
                    rep.mirrors += " and F_4";
                    for (auto& [f, c] : f4) rep.shape.add(mult << (m - t), 2 * f, c);
                    // layer exponents 1, 1, 2^2, 2^3, ..., 2^(t-1), all times 2^(m-t)
                    for (auto& [f, c] : f2) rep.shape.add(mult << (m - t), f, 2 * c);
                    for (int l = 3; l <= t; ++l)
                        for (auto& [f, c] : f2) rep.shape.add(mult << (m - t + l - 1), f, c);
                }
            } else if (m == 2) {
                rep.case_label = "2.IV.iii.3"; // here k = 1
                for (auto& [f, c] : f2) rep.shape.add(mult * 2, f, 2 * c);
            } else { // t > k, m >= 3
                rep.case_label = "2.IV.iii.4";
                if (k == 1) {
                    // two factors only (checked against the explicit 2-adic
                    // factorization x^(2^(m-1)) -+ 2*alpha^(2^(t-1)))
                    rep.notes.push_back("k = 1 degenerate pattern: two copies per factor");
                    for (auto& [f, c] : f2) rep.shape.add(mult << (m - 1), f, 2 * c);
                } else {
                    for (auto& [f, c] : f2) rep.shape.add(mult << (m - k), f, 4 * c);
                    for (int l = 3; l <= k; ++l)
                        for (auto& [f, c] : f2) rep.shape.add(mult << (m - k + l - 1), f, c);
                }
            }
        }
    }

    rep.shape.canonicalize();
    if (rep.shape.degree_sum() != n) throw std::logic_error("split2: degree sum mismatch in case " + rep.case_label);
    return rep;
}

SplitReport split_odd(const RadicalInput& in, long long p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("split_odd: use split2 for p = 2");
    SplitReport rep;
    const long long n = in.n;
    OddProfile pr = profile_odd(in, p);
    const int m = pr.m;
    const long long n0 = pr.n0;
    const bool p_div_a = bmod(in.a, p) == 0;

    if (m == 0 && !p_div_a) {
        rep.case_label = "odd.I";
        rep.mirrors = poly_desc(n, in.a) + " over F_" + std::to_string(p);
        for (auto& [f, c] : binom_fp(n, in.a, p)) rep.shape.add(1, f, c);
    } else if (p_div_a && std::gcd(vp(in.a, p), n) % p != 0) {
        rep.case_label = "odd.II";
        long long g = std::gcd(*pr.h, n);
        rep.mirrors = poly_desc(g, pr.a0) + " over F_" + std::to_string(p);
        {
            std::ostringstream os;
            os << "gcd(h, n) = " << g << ", gcd(v_p(a), n) = " << std::gcd(vp(in.a, p), n);
            rep.notes.push_back(os.str());
        }
        for (auto& [f, c] : binom_fp(g, pr.a0, p)) rep.shape.add(n / g, f, c);
    } else if (!p_div_a) {
        // p | n, p does not divide a
        int w = *pr.w;
        rep.mirrors = poly_desc(n0, in.a) + " over F_" + std::to_string(p);
        auto dist = binom_fp(n0, in.a, p);
        if (w <= m + 1) {
            rep.case_label = "odd.III.i";
            long long scale = bpow(p, m - w + 1).convert_to<long long>();
            long long pl = 1; // p^(l-1)
            for (int l = 1; l <= w; ++l, pl *= p)
                for (auto& [f, c] : dist) rep.shape.add(euler_phi(pl) * scale, f, c);
        } else {
            rep.case_label = "odd.III.ii";
            long long pl = 1;
            for (int l = 1; l <= m + 1; ++l, pl *= p)
                for (auto& [f, c] : dist) rep.shape.add(euler_phi(pl), f, c);
        }
    } else {
        // p | n, p | a, p | v_p(a)
        rep.case_label = "odd.IV";
        const long long h = *pr.h;
        const int c0 = *pr.c;
        const long long d0 = *pr.d0;
        const long long d = *pr.d;
        BigInt sign_a0 = (h % 2 == 0) ? pr.a0 : -pr.a0; // (-1)^(h p^k) a0
        rep.mirrors = "g0 = " + poly_desc(d0, pr.a0) + ", g = " + poly_desc(d, sign_a0) +
                      " over F_" + std::to_string(p);
        long long pc = bpow(p, m - c0).convert_to<long long>();
        for (auto& [f, c] : binom_fp(d0, pr.a0, p)) rep.shape.add((n0 / d0) * pc, f, c);
        auto dist = binom_fp(d, sign_a0, p);
        long long pl = p; // p^l
        for (int l = 1; l <= c0; ++l, pl *= p)
            for (auto& [f, c] : dist) rep.shape.add((n0 / d) * pc * euler_phi(pl), f, c);
    }

    rep.shape.canonicalize();
    if (rep.shape.degree_sum() != n)
        throw std::logic_error("split_odd: degree sum mismatch in case " + rep.case_label);
    return rep;
}

SplitReport split(const RadicalInput& in, const BigInt& p) {
    if (!is_probable_prime(p)) throw std::invalid_argument("split: p must be prime");
    if (p == 2) return split2(in);
    return split_odd(in, p.convert_to<long long>());
}

SplitReport split(long long n, const BigInt& a, const BigInt& p) {
    NormalizedInput norm = normalize_input(n, a);
    SplitReport rep = split(norm.input, p);
    rep.reduced = norm.reduced;
    rep.removed_root = norm.removed_root;
    if (norm.reduced)
        rep.notes.push_back("radicand carries the n-th power of " + norm.removed_root.str() +
                            "; splitting is that of the reduced field");
    return rep;
}

OracleAgreement validate_against_oracle(const RadicalInput& in, const BigInt& p) {
    OracleAgreement out;
    out.report = split(in, p);

    oracle::IntPoly f(in.n + 1, 0);
    f[0] = -in.a;
    f[in.n] = 1;
    oracle::OreResult ore = oracle::ore_shape(f, p);
    out.oracle_conclusive = ore.conclusive;
    out.oracle_detail = ore.detail;
    if (ore.conclusive) {
        out.oracle_shape = ore.shape;
        out.agree = (ore.shape == out.report.shape);
        if (!out.agree)
            throw std::logic_error("oracle disagreement for n=" + std::to_string(in.n) + ", a=" +
                                   in.a.str() + ", p=" + p.str() + ": closed form " +
                                   out.report.shape.str() + " vs oracle " + ore.shape.str());
    }

    if (p == 2 && in.m >= 1 && bmod(in.a, 2) == 0) {
        out.velez_run = true;
        auto rep = oracle::verify_velez(in.m, in.a);
        out.velez_ok = rep.verified;
        out.velez_label = rep.case_label;
        if (!rep.verified)
            throw std::logic_error("2-adic factor verification failed for m=" +
                                   std::to_string(in.m) + ", a=" + in.a.str() + ": " + rep.message);
    }
    return out;
}

} // namespace radix

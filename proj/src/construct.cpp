#include "radix/construct.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <sstream>

#include "radix/indexdiv.hpp"

namespace radix {

namespace {

BigInt powmod(const BigInt& b, const BigInt& e, const BigInt& m) {
    return BigInt(boost::multiprecision::powm(b, e, m));
}

bool is_prime_ll(long long x) { return is_probable_prime(BigInt(x)); }

bool is_squarefree_ll(long long m) {
    if (m < 1) return false;
    for (long long q = 2; q * q <= m; q == 2 ? q = 3 : q += 2) {
        if (m % q == 0) {
            m /= q;
            if (m % q == 0) return false;
        }
    }
    return true;
}

long long smallest_generator(long long p) {
    BigInt pm1 = p - 1;
    auto qs = prime_divisors(p - 1);
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (long long q : qs)
            if (powmod(BigInt(g), pm1 / q, BigInt(p)) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("smallest_generator: none found (p not prime?)");
}

long long modinv(long long x, long long p) {
    return (long long)powmod(BigInt(bmod(x, p)), BigInt(p - 2), BigInt(p));
}

bool generates(const BigInt& a, long long p) {
    BigInt r = bmod(a, p);
    if (r == 0) return false;
    BigInt pm1 = p - 1;
    for (long long q : prime_divisors(p - 1))
        if (powmod(r, pm1 / q, BigInt(p)) == 1) return false;
    return true;
}

// a^q = a (mod q^2) would make x^n - a non-maximal at q
bool aq_obstruction_clear(const BigInt& a, long long q) {
    BigInt q2 = BigInt(q) * q;
    BigInt r = bmod(a, q2);
    return powmod(r, BigInt(q), q2) != r;
}

std::string fmt(const BigInt& v) { return v.str(); }

ExceptionalCertificate verify_exceptional(long long n, long long p, long long ell, long long m) {
    auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << "exceptional candidate rejected (n=" << n << ", p=" << p << ", ell=" << ell
           << ", m=" << m << "): " << why;
        throw std::runtime_error(os.str());
    };
    ExceptionalCertificate cert;
    cert.n = n;
    cert.p = p;
    cert.ell = ell;
    cert.mm = m;

    if (!is_prime_ll(p)) fail("p is not prime");
    if ((p - 1) % n != 0) fail("n does not divide p - 1");
    if (n % 2 == 0 && p - 1 == n) fail("even n must properly divide p - 1");
    if (!is_prime_ll(ell) || ell % 2 == 0) fail("ell is not an odd prime");
    if (!is_squarefree_ll(m)) fail("m is not squarefree");
    if (m % ell == 0) fail("ell divides m");
    if (n % ell == 0) fail("ell divides n");

    BigInt a = BigInt(ell) * ell * m;
    cert.a = a;
    cert.xi = smallest_generator(p);

    if (!generates(a, p)) fail("a does not generate (Z/pZ)*");
    cert.checks.push_back("a = " + fmt(a) + " generates (Z/" + std::to_string(p) + "Z)*");

    // the wild-ramification ratio that every p-maximal generator misses
    long long exp_used = n % 2 == 1 ? n - 1 : n;
    cert.ell_pow_mod_p = powmod(BigInt(ell), BigInt(exp_used), BigInt(p));
    BigInt other = powmod(BigInt(ell), BigInt(n % 2 == 1 ? n : n - 1), BigInt(p));
    if (cert.ell_pow_mod_p == 1) fail("ell^" + std::to_string(exp_used) + " = 1 mod p");
    cert.checks.push_back("ell^" + std::to_string(exp_used) + " = " + fmt(cert.ell_pow_mod_p) +
                          " (mod " + std::to_string(p) + "), not 1; companion ell^" +
                          std::to_string(n % 2 == 1 ? n : n - 1) + " = " + fmt(other));

    for (long long q : prime_divisors(n)) {
        if (!aq_obstruction_clear(a, q)) fail("a^q = a mod q^2 at q = " + std::to_string(q));
        cert.checks.push_back("a^" + std::to_string(q) + " != a (mod " + std::to_string(q * q) +
                              ")");
    }

    RadicalInput in;
    try {
        in = RadicalInput::make(n, a);
    } catch (const std::invalid_argument& e) {
        fail(std::string("x^n - a reducible: ") + e.what());
    }

    cert.disc_mod_p = bmod(disc_radical(n, a), p);
    cert.checks.push_back("Disc(x^" + std::to_string(n) + " - a) = " + fmt(cert.disc_mod_p) +
                          " (mod " + std::to_string(p) + ")");

    if (!common_index_divisors(in, 1).empty()) fail("field has a common index divisor");
    cert.checks.push_back("no prime dividing " + std::to_string(n) +
                          " is a common index divisor");
    return cert;
}

// ---- index form machinery -------------------------------------------------

Monomial mono_add(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// mod == 0 means exact integer arithmetic
void accum(IndexForm& dst, const Monomial& e, const BigInt& v, long long mod) {
    BigInt& slot = dst[e];
    slot += v;
    if (mod > 0) slot = bmod(slot, mod);
    if (slot == 0) dst.erase(e);
}

IndexForm form_mul(const IndexForm& a, const IndexForm& b, long long mod) {
    IndexForm r;
    for (const auto& [ea, va] : a)
        for (const auto& [eb, vb] : b) accum(r, mono_add(ea, eb), va * vb, mod);
    return r;
}

void form_add(IndexForm& dst, const IndexForm& src, const BigInt& scale, long long mod) {
    for (const auto& [e, v] : src) accum(dst, e, v * scale, mod);
}

// element of Q(theta) in coordinates over the basis {1, theta, p^(2/n)k^(n-2)/n, ...};
// basis products obey b_i * b_j = k * b_(i+j) for i+j < n and p * b_(i+j-n) otherwise
using Element = std::vector<IndexForm>;

Element elem_mul(const Element& u, const Element& v, long long n, long long k, long long p,
                 long long mod) {
    Element r(n);
    for (long long i = 0; i < n; ++i) {
        if (u[i].empty()) continue;
        for (long long j = 0; j < n; ++j) {
            if (v[j].empty()) continue;
            IndexForm prod = form_mul(u[i], v[j], mod);
            if (i + j < n)
                form_add(r[i + j], prod, i > 0 && j > 0 ? BigInt(k) : BigInt(1), mod);
            else if (i + j == n)
                form_add(r[0], prod, BigInt(p) * k, mod); // b_0 = 1, not p^0 k^(n/n)
            else
                form_add(r[i + j - n], prod, BigInt(p), mod);
        }
    }
    return r;
}

IndexForm det_rec(const std::vector<std::vector<IndexForm>>& mat, size_t row,
                  std::vector<char>& used, size_t vars, long long mod) {
    size_t sz = mat.size();
    if (row == sz) {
        IndexForm one;
        one[Monomial(vars, 0)] = 1;
        return one;
    }
    IndexForm out;
    int sign = 1;
    for (size_t col = 0; col < sz; ++col) {
        if (used[col]) continue;
        if (!mat[row][col].empty()) {
            used[col] = 1;
            IndexForm minor = det_rec(mat, row + 1, used, vars, mod);
            used[col] = 0;
            IndexForm term = form_mul(mat[row][col], minor, mod);
            form_add(out, term, BigInt(sign), mod);
        }
        sign = -sign;
    }
    return out;
}

IndexForm determinant(const std::vector<std::vector<IndexForm>>& mat, size_t vars, long long mod) {
    std::vector<char> used(mat.size(), 0);
    return det_rec(mat, 0, used, vars, mod);
}

// the (n-1) x (n-1) minor of the change-of-basis matrix: rows are the basis
// coordinates 1..n-1 of alpha^1, ..., alpha^(n-1)
std::vector<std::vector<IndexForm>> index_matrix(long long n, long long k, long long p,
                                                 long long mod) {
    size_t vars = (size_t)n - 1;
    Element alpha(n);
    for (long long i = 1; i < n; ++i) {
        Monomial e(vars, 0);
        e[i - 1] = 1;
        alpha[i][e] = 1;
    }
    Element one(n);
    one[0][Monomial(vars, 0)] = 1;

    std::vector<std::vector<IndexForm>> mat;
    Element pw = one;
    for (long long r = 1; r < n; ++r) {
        pw = elem_mul(pw, alpha, n, k, p, mod);
        std::vector<IndexForm> row;
        for (long long j = 1; j < n; ++j) row.push_back(pw[j]);
        mat.push_back(std::move(row));
    }
    return mat;
}

void check_index_hypotheses(long long n, long long p, long long k) {
    if (!is_prime_ll(p)) throw std::invalid_argument("index form: p must be prime");
    if (n % p == 0 || k % p == 0) throw std::invalid_argument("index form: p must not divide nk");
    if (k <= 1 || !is_squarefree_ll(k))
        throw std::invalid_argument("index form: k must be squarefree and > 1");
    BigInt base = BigInt(p) * bpow(BigInt(k), n - 1);
    for (long long q : prime_divisors(n)) {
        if (!aq_obstruction_clear(base, q))
            throw std::invalid_argument("index form: (pk^(n-1))^q = pk^(n-1) (mod " +
                                        std::to_string(q * q) + ")");
    }
}

bool reduced_insolvable(const BigInt& c, long long n, long long p) {
    long long exp = n * (n - 1) / 2;
    for (long long x = 0; x < p; ++x) {
        BigInt v = bmod(c * powmod(BigInt(x), BigInt(exp), BigInt(p)), p);
        if (v == 1 || v == p - 1) return false;
    }
    return true;
}

} // namespace

RadicalInput cnid_family(int N) {
    if (N < 1 || N > 5)
        throw std::invalid_argument("cnid_family: N must be in [1, 5] (degree 2^(2^N))");
    long long n = 1LL << (1 << N);
    return RadicalInput::make(n, BigInt(4) * n + 1);
}

oracle::IntPoly pleasants_poly(long long p, int N, long long ell) {
    if (!is_prime_ll(p) || !is_prime_ll(ell))
        throw std::invalid_argument("pleasants_poly: p and ell must be prime");
    if (ell == p) throw std::invalid_argument("pleasants_poly: ell must differ from p");
    if (N < 1) throw std::invalid_argument("pleasants_poly: N must be positive");
    BigInt degb = bpow(BigInt(p), N) + 1;
    if (degb > 1024) throw std::invalid_argument("pleasants_poly: degree p^N + 1 too large");
    long long deg = (long long)degb;
    oracle::IntPoly f(deg + 1);
    f[deg] = 1;
    for (long long i = 1; i <= deg; ++i) f[deg - i] = BigInt(ell) * bpow(BigInt(p), i * (i + 1) / 2);
    return f;
}

BigInt disc_radical(long long n, const BigInt& a) {
    if (n < 2 || a == 0) throw std::invalid_argument("disc_radical: need n >= 2, a != 0");
    BigInt d = bpow(BigInt(n), n) * bpow(-a, n - 1);
    return (n * (n - 1) / 2) % 2 == 0 ? d : -d;
}

ExceptionalCertificate exceptional_disc_search(long long n, long long budget,
                                               const DiscSearchHints& hints, long long seed) {
    if (n <= 2) throw std::invalid_argument("exceptional_disc_search: n must exceed 2");
    if (hints.p && hints.ell && hints.m)
        return verify_exceptional(n, *hints.p, *hints.ell, *hints.m);

    long long attempts = 0;
    long long found = 0;
    auto spend = [&]() {
        if (++attempts > budget)
            throw BudgetExhausted("exceptional_disc_search: budget exhausted after " +
                                      std::to_string(attempts - 1) + " candidates (n = " +
                                      std::to_string(n) + ")",
                                  attempts - 1);
    };

    for (long long p = hints.p.value_or(n + 1);; p += n) {
        if (hints.p && p != *hints.p) break;
        spend();
        if (!is_prime_ll(p)) continue;
        if (n % 2 == 0 && p - 1 == n) continue;
        long long xi = smallest_generator(p);

        long long ell = 0;
        if (hints.ell) {
            ell = *hints.ell;
        } else {
            for (long long c = xi;; c += p) {
                spend();
                if (c > 2 && c % 2 == 1 && n % c != 0 && is_prime_ll(c)) { ell = c; break; }
                if (c > xi + 400 * p) break; // give up on this p
            }
        }
        if (ell == 0) continue;

        long long r = modinv(xi, p);
        for (long long m = hints.m.value_or(r);; m += p) {
            if (!hints.m && m > r + 400 * p) break;
            spend();
            if (m > 1 && is_squarefree_ll(m) && m % ell != 0) {
                try {
                    ExceptionalCertificate cert = verify_exceptional(n, p, ell, m);
                    if (found++ == seed) return cert;
                } catch (const std::runtime_error&) {
                }
            }
            if (hints.m) break;
        }
        if (hints.p) break;
    }
    throw BudgetExhausted("exceptional_disc_search: hinted candidates rejected", attempts);
}

IndexFormWitness index_form_mod_p(long long n, long long p, long long k) {
    if (n < 3 || n > 7)
        throw std::invalid_argument("index form: desk-scale limit, n must be in [3, 7]");
    check_index_hypotheses(n, p, k);

    IndexFormWitness w;
    w.n = n;
    w.p = p;
    w.k = k;
    w.c = powmod(BigInt(k), BigInt((n - 1) * (n - 2) / 2), BigInt(p));

    w.reduced_form = determinant(index_matrix(n, k, p, p), (size_t)n - 1, p);
    Monomial expected((size_t)n - 1, 0);
    expected[0] = (int)(n * (n - 1) / 2);
    if (w.reduced_form.size() != 1 || w.reduced_form.begin()->first != expected ||
        w.reduced_form.begin()->second != w.c)
        throw std::logic_error("index form mod p does not reduce to k^((n-1)(n-2)/2) X1^(n(n-1)/2)");

    w.full_form = determinant(index_matrix(n, k, p, 0), (size_t)n - 1, 0);
    IndexForm reduced_again;
    for (const auto& [e, v] : w.full_form) accum(reduced_again, e, v, p);
    w.full_matrix_checked = reduced_again == w.reduced_form;
    if (!w.full_matrix_checked)
        throw std::logic_error("integer index form does not reduce to the mod-p determinant");

    w.insolvable = reduced_insolvable(w.c, n, p);
    return w;
}

IndexFormWitness exceptional_index_search(long long n, long long budget, long long seed) {
    if (n <= 2) throw std::invalid_argument("exceptional_index_search: n must exceed 2");
    long long attempts = 0;
    long long found = 0;
    for (long long p = 3;; p += 2) {
        if (++attempts > budget)
            throw BudgetExhausted("exceptional_index_search: budget exhausted (n = " +
                                      std::to_string(n) + ")",
                                  attempts - 1);
        if (!is_prime_ll(p) || n % p == 0) continue;
        if (std::gcd(p - 1, n) <= 2) continue;
        long long xi = smallest_generator(p);
        long long kinv = modinv(xi, p);
        for (long long k = kinv; k <= kinv + 50 * p; k += p) {
            if (++attempts > budget)
                throw BudgetExhausted("exceptional_index_search: budget exhausted (n = " +
                                          std::to_string(n) + ")",
                                      attempts - 1);
            if (k <= 1 || !is_squarefree_ll(k)) continue;
            BigInt base = BigInt(p) * bpow(BigInt(k), n - 1);
            bool ok = true;
            for (long long q : prime_divisors(n))
                if (!aq_obstruction_clear(base, q)) { ok = false; break; }
            if (!ok) continue;
            BigInt c = powmod(BigInt(k), BigInt((n - 1) * (n - 2) / 2), BigInt(p));
            if (!reduced_insolvable(c, n, p)) continue;
            IndexFormWitness w;
            if (n <= 7) {
                w = index_form_mod_p(n, p, k);
            } else {
                w.n = n;
                w.p = p;
                w.k = k;
                w.c = c;
                Monomial e((size_t)n - 1, 0);
                e[0] = (int)(n * (n - 1) / 2);
                w.reduced_form[e] = c;
                w.insolvable = true;
            }
            if (found++ == seed) return w;
        }
    }
}

} // namespace radix

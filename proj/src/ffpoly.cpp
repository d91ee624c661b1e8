#include "radix/ffpoly.hpp"

#include <random>
#include <sstream>

namespace radix::ff {

namespace {
inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (std::uint64_t)((unsigned __int128)a * b % p);
}
inline std::uint64_t powm(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (n) {
        if (n & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        n >>= 1;
    }
    return r;
}
inline std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return powm(a, p - 2, p);
}
} // namespace

FqField::FqField(std::uint64_t p, int e) : p_(p), e_(e) {
    if (p < 2 || !is_probable_prime(BigInt(p))) throw std::invalid_argument("FqField: p must be prime");
    if (e < 1) throw std::invalid_argument("FqField: e must be >= 1");
    if (p >= (1ULL << 31)) throw std::invalid_argument("FqField: p too large");
    if (e == 1) {
        mod_ = {0, 1};
        return;
    }
    // first monic irreducible of degree e in lexicographic coefficient order;
    // for p=2, e=2 this yields z^2+z+1, the fixed model of F_4
    FqField base(p, 1);
    BigInt total = bpow(BigInt(p), e);
    for (BigInt v = 0; v < total; ++v) {
        std::vector<std::uint64_t> cand(e + 1, 0);
        cand[e] = 1;
        BigInt t = v;
        for (int i = 0; i < e; ++i) {
            cand[i] = (std::uint64_t)(t % p);
            t /= p;
        }
        FqPoly fp;
        for (auto c : cand) fp.push_back(FqField::Elem{c});
        if (is_irreducible(fp, base)) {
            mod_ = cand;
            return;
        }
    }
    throw std::logic_error("FqField: no irreducible modulus found");
}

FqField::FqField(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), mod_(std::move(modulus)) {
    if (p < 2 || !is_probable_prime(BigInt(p))) throw std::invalid_argument("FqField: p must be prime");
    if (p >= (1ULL << 31)) throw std::invalid_argument("FqField: p too large");
    while (mod_.size() > 1 && mod_.back() % p == 0) mod_.pop_back();
    if (mod_.size() < 2) throw std::invalid_argument("FqField: modulus must have degree >= 1");
    e_ = (int)mod_.size() - 1;
    for (auto& c : mod_) c %= p;
    if (mod_.back() != 1) {
        std::uint64_t lead_inv = invm(mod_.back(), p);
        for (auto& c : mod_) c = mulm(c, lead_inv, p);
    }
    check_irreducible();
}

void FqField::check_irreducible() const {
    if (e_ == 1) return;
    FqField base(p_, 1);
    FqPoly fp;
    for (auto c : mod_) fp.push_back(FqField::Elem{c});
    if (!is_irreducible(fp, base)) throw std::invalid_argument("FqField: modulus is reducible");
}

FqField::Elem FqField::one() const {
    Elem r(e_, 0);
    r[0] = 1 % p_;
    return r;
}

FqField::Elem FqField::gen() const {
    Elem r(e_, 0);
    if (e_ == 1)
        r[0] = bmod(BigInt(-(long long)mod_[0]), BigInt(p_)).convert_to<std::uint64_t>();
    else
        r[1] = 1;
    return r;
}

FqField::Elem FqField::from_int(const BigInt& v) const {
    Elem r(e_, 0);
    r[0] = bmod(v, BigInt(p_)).convert_to<std::uint64_t>();
    return r;
}

bool FqField::is_zero(const Elem& a) const {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

FqField::Elem FqField::add(const Elem& a, const Elem& b) const {
    Elem r(e_);
    for (int i = 0; i < e_; ++i) r[i] = addm(a[i], b[i], p_);
    return r;
}

FqField::Elem FqField::sub(const Elem& a, const Elem& b) const {
    Elem r(e_);
    for (int i = 0; i < e_; ++i) r[i] = subm(a[i], b[i], p_);
    return r;
}

FqField::Elem FqField::neg(const Elem& a) const {
    Elem r(e_);
    for (int i = 0; i < e_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
    return r;
}

FqField::Elem FqField::mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < e_; ++j)
            if (b[j] != 0) prod[i + j] = addm(prod[i + j], mulm(a[i], b[j], p_), p_);
    }
    // reduce by the monic modulus
    for (int i = 2 * e_ - 2; i >= e_; --i) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < e_; ++j)
            prod[i - e_ + j] = subm(prod[i - e_ + j], mulm(c, mod_[j], p_), p_);
    }
    return Elem(prod.begin(), prod.begin() + e_);
}

FqField::Elem FqField::pow(Elem a, BigInt n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    Elem r = one();
    while (n > 0) {
        if ((n & 1) != 0) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

FqField::Elem FqField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("FqField::inv: zero element");
    return pow(a, q() - 2);
}

FqField::Elem FqField::pth_root(const Elem& a) const {
    if (e_ == 1) return a;
    return pow(a, bpow(BigInt(p_), e_ - 1));
}

std::string FqField::str(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = e_ - 1; i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a[i] != 1) os << a[i];
        if (i >= 1) {
            if (a[i] != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

int pdeg(const FqPoly& f) { return (int)f.size() - 1; }

void ptrim(FqPoly& f, const FqField& F) {
    while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

FqPoly pzero() { return {}; }

FqPoly pconst(const FqField::Elem& c, const FqField& F) {
    FqPoly r{c};
    ptrim(r, F);
    return r;
}

bool peq(const FqPoly& a, const FqPoly& b, const FqField& F) {
    FqPoly x = a, y = b;
    ptrim(x, F);
    ptrim(y, F);
    return x == y;
}

FqPoly padd(const FqPoly& a, const FqPoly& b, const FqField& F) {
    FqPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = F.add(r[i], a[i]);
        if (i < b.size()) r[i] = F.add(r[i], b[i]);
    }
    ptrim(r, F);
    return r;
}

FqPoly psub(const FqPoly& a, const FqPoly& b, const FqField& F) {
    FqPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = F.add(r[i], a[i]);
        if (i < b.size()) r[i] = F.sub(r[i], b[i]);
    }
    ptrim(r, F);
    return r;
}

FqPoly pmul(const FqPoly& a, const FqPoly& b, const FqField& F) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!F.is_zero(b[j])) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    ptrim(r, F);
    return r;
}

FqPoly pscale(const FqPoly& a, const FqField::Elem& c, const FqField& F) {
    FqPoly r(a.size(), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    ptrim(r, F);
    return r;
}

void pdivrem(const FqPoly& a, const FqPoly& b, FqPoly& quo, FqPoly& rem, const FqField& F) {
    FqPoly bb = b;
    ptrim(bb, F);
    if (bb.empty()) throw std::domain_error("pdivrem: division by zero polynomial");
    rem = a;
    ptrim(rem, F);
    quo.assign(rem.size() >= bb.size() ? rem.size() - bb.size() + 1 : 0, F.zero());
    FqField::Elem lead_inv = F.inv(bb.back());
    while ((int)rem.size() >= (int)bb.size() && !rem.empty()) {
        size_t shift = rem.size() - bb.size();
        FqField::Elem c = F.mul(rem.back(), lead_inv);
        quo[shift] = c;
        for (size_t i = 0; i < bb.size(); ++i)
            rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bb[i]));
        ptrim(rem, F);
    }
    ptrim(quo, F);
}

FqPoly pmod(const FqPoly& a, const FqPoly& b, const FqField& F) {
    FqPoly q, r;
    pdivrem(a, b, q, r, F);
    return r;
}

FqPoly pmonic(const FqPoly& a, const FqField& F) {
    FqPoly r = a;
    ptrim(r, F);
    if (r.empty()) return r;
    return pscale(r, F.inv(r.back()), F);
}

FqPoly pgcd(FqPoly a, FqPoly b, const FqField& F) {
    ptrim(a, F);
    ptrim(b, F);
    while (!b.empty()) {
        FqPoly r = pmod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, F);
}

FqPoly pderiv(const FqPoly& a, const FqField& F) {
    FqPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], F.from_int(BigInt(i))));
    ptrim(r, F);
    return r;
}

FqPoly ppowmod(FqPoly base, BigInt n, const FqPoly& mod, const FqField& F) {
    base = pmod(base, mod, F);
    FqPoly r = pconst(F.one(), F);
    while (n > 0) {
        if ((n & 1) != 0) r = pmod(pmul(r, base, F), mod, F);
        base = pmod(pmul(base, base, F), mod, F);
        n >>= 1;
    }
    return r;
}

std::string pstr(const FqPoly& f, const FqField& F) {
    FqPoly g = f;
    ptrim(g, F);
    if (g.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = pdeg(g); i >= 0; --i) {
        if (F.is_zero(g[i])) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = F.str(g[i]);
        bool unit = (cs == "1");
        if (i == 0 || !unit) os << (F.e() > 1 && !unit && i > 0 ? "(" + cs + ")" : cs);
        if (i >= 1) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

FqPoly make_x(const FqField& F) { return FqPoly{F.zero(), F.one()}; }

// f must be squarefree and monic: split into (factor, degree) products
std::vector<std::pair<FqPoly, long long>> distinct_degree(FqPoly f, const FqField& F) {
    std::vector<std::pair<FqPoly, long long>> out;
    BigInt q = F.q();
    FqPoly x = make_x(F);
    FqPoly h = pmod(x, f, F);
    long long d = 0;
    while (pdeg(f) > 0) {
        ++d;
        if (2 * d > pdeg(f)) {
            out.push_back({f, (long long)pdeg(f)});
            break;
        }
        h = ppowmod(h, q, f, F);
        FqPoly g = pgcd(psub(h, x, F), f, F);
        if (pdeg(g) > 0) {
            out.push_back({g, d});
            FqPoly quo, rem;
            pdivrem(f, g, quo, rem, F);
            f = quo;
            h = pmod(h, f, F);
        }
    }
    return out;
}

FqPoly random_poly(int maxdeg, const FqField& F, std::mt19937_64& rng) {
    FqPoly r;
    for (int i = 0; i <= maxdeg; ++i) {
        FqField::Elem c = F.zero();
        for (int j = 0; j < F.e(); ++j) c[j] = rng() % F.p();
        r.push_back(c);
    }
    ptrim(r, F);
    return r;
}

// Cantor-Zassenhaus equal-degree split; f monic squarefree, all factors of degree d
void equal_degree(const FqPoly& f, long long d, const FqField& F, std::mt19937_64& rng,
                  std::vector<FqPoly>& out) {
    if (pdeg(f) == d) {
        out.push_back(f);
        return;
    }
    BigInt q = F.q();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FqPoly r = random_poly(pdeg(f) - 1, F, rng);
        if (pdeg(r) < 1) continue;
        FqPoly g;
        if (F.p() == 2) {
            // trace map over F_{2^e}: sum of r^(2^i), i < e*d
            FqPoly acc = pmod(r, f, F);
            FqPoly cur = acc;
            long long steps = (long long)F.e() * d;
            for (long long i = 1; i < steps; ++i) {
                cur = pmod(pmul(cur, cur, F), f, F);
                acc = padd(acc, cur, F);
            }
            g = pgcd(acc, f, F);
        } else {
            BigInt exp = (bpow(q, d) - 1) / 2;
            FqPoly t = ppowmod(r, exp, f, F);
            g = pgcd(psub(t, pconst(F.one(), F), F), f, F);
        }
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            FqPoly quo, rem;
            pdivrem(f, g, quo, rem, F);
            equal_degree(g, d, F, rng, out);
            equal_degree(quo, d, F, rng, out);
            return;
        }
    }
    throw std::logic_error("equal_degree: splitting failed");
}

// squarefree decomposition in characteristic p; returns (squarefree monic, multiplicity)
void squarefree_parts(FqPoly f, long long mult, const FqField& F,
                      std::vector<std::pair<FqPoly, long long>>& out) {
    f = pmonic(f, F);
    if (pdeg(f) < 1) return;
    FqPoly fp = pderiv(f, F);
    auto take_pth_root = [&](const FqPoly& g) {
        FqPoly r;
        for (size_t i = 0; i * F.p() < g.size(); ++i) r.push_back(F.pth_root(g[i * F.p()]));
        ptrim(r, F);
        return r;
    };
    if (fp.empty()) {
        squarefree_parts(take_pth_root(f), mult * (long long)F.p(), F, out);
        return;
    }
    FqPoly c = pgcd(f, fp, F);
    FqPoly w, rem;
    pdivrem(f, c, w, rem, F);
    long long i = 1;
    while (pdeg(w) > 0) {
        FqPoly y = pgcd(w, c, F);
        FqPoly z, r2;
        pdivrem(w, y, z, r2, F);
        if (pdeg(z) > 0) out.push_back({z, mult * i});
        FqPoly c2, r3;
        pdivrem(c, y, c2, r3, F);
        c = c2;
        w = y;
        ++i;
    }
    if (pdeg(c) > 0) squarefree_parts(take_pth_root(c), mult * (long long)F.p(), F, out);
}

} // namespace

bool is_irreducible(const FqPoly& f, const FqField& F) {
    FqPoly g = pmonic(f, F);
    int n = pdeg(g);
    if (n < 1) return false;
    if (n == 1) return true;
    BigInt q = F.q();
    FqPoly x = make_x(F);
    if (!peq(ppowmod(x, bpow(q, n), g, F), pmod(x, g, F), F)) return false;
    for (long long l : prime_divisors(n)) {
        FqPoly h = ppowmod(x, bpow(q, n / l), g, F);
        if (pdeg(pgcd(psub(h, x, F), g, F)) != 0) return false;
    }
    return true;
}

std::vector<std::pair<FqPoly, long long>> factor(const FqPoly& poly, const FqField& F,
                                                 std::uint64_t seed) {
    FqPoly f = poly;
    ptrim(f, F);
    if (pdeg(f) < 1) throw std::invalid_argument("factor: polynomial must have degree >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<FqPoly, long long>> sf;
    squarefree_parts(f, 1, F, sf);
    std::vector<std::pair<FqPoly, long long>> out;
    for (auto& [g, mult] : sf) {
        for (auto& [piece, d] : distinct_degree(g, F)) {
            std::vector<FqPoly> irr;
            equal_degree(piece, d, F, rng, irr);
            for (auto& u : irr) out.push_back({u, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (pdeg(a.first) != pdeg(b.first)) return pdeg(a.first) < pdeg(b.first);
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

std::string DegreeDistribution::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [f, c] : counts) {
        if (!first) os << ", ";
        first = false;
        os << f << ":" << c;
    }
    os << "}";
    return os.str();
}

DegreeDistribution cyclotomic_distribution(long long d, const BigInt& q) {
    if (d < 1) throw std::invalid_argument("cyclotomic_distribution: d must be positive");
    if (bgcd(BigInt(d), q) != 1)
        throw std::invalid_argument("cyclotomic_distribution: gcd(d, q) must be 1");
    DegreeDistribution dist;
    dist.distinct = true;
    for (long long e : divisors(d)) {
        long long qe = e == 1 ? 0 : bmod(q, BigInt(e)).convert_to<long long>();
        long long ord = e == 1 ? 1 : mul_order(qe, e);
        dist.counts[ord] += euler_phi(e) / ord;
    }
    return dist;
}

BigInt irred_count(long long f, const BigInt& q) {
    if (f < 1 || q < 2) throw std::invalid_argument("irred_count: need f >= 1, q >= 2");
    BigInt s = 0;
    for (long long d : divisors(f)) s += moebius(f / d) * bpow(q, d);
    return s / f;
}

DegreeDistribution binomial_distribution(long long n, const FqField::Elem& c, const FqField& F,
                                         std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("binomial_distribution: n must be positive");
    if (F.is_zero(c))
        throw std::invalid_argument("totally ramified input; use splitting module");
    // Separable case in closed form: the roots are g^(1 + rt) inside the
    // cyclic group mu_L, L = n * ord(c), and factor degrees are the orbit
    // sizes of multiplication by q.  Avoids factoring the polynomial.
    if (n % (long long)F.p() != 0 && F.q() < 1000000) {
        long long q = (long long)F.q();
        long long r = q - 1;
        for (long long l : prime_divisors(q == 2 ? 1 : q - 1))
            while (r % l == 0 && F.eq(F.pow(c, r / l), F.one())) r /= l;
        long long L = n * r;
        if (L <= 10000000) {
            DegreeDistribution dist;
            dist.distinct = true;
            std::map<long long, long long> roots;
            for (long long t = 0; t < n; ++t) {
                long long e = (1 + r * t) % L;
                long long d = L / std::gcd(L, e);
                roots[mul_order(q % d, d)] += 1;
            }
            for (auto& [k, cnt] : roots) {
                if (cnt % k != 0)
                    throw std::logic_error("binomial_distribution: orbit count not divisible");
                dist.counts[k] = cnt / k;
            }
            return dist;
        }
    }
    FqPoly f(n + 1, F.zero());
    f[0] = F.neg(c);
    f[n] = F.one();
    DegreeDistribution dist;
    dist.distinct = true;
    for (auto& [g, mult] : factor(f, F, seed)) {
        dist.counts[pdeg(g)] += mult;
        if (mult > 1) dist.distinct = false;
    }
    return dist;
}

} // namespace radix::ff

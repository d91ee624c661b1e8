#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "radix/arith.hpp"
#include "radix/newton.hpp"
#include "radix/padic.hpp"

using namespace radix;
using namespace radix::oracle;

namespace {

IntPoly binomial(long long n, const BigInt& a) {
    IntPoly f(n + 1, 0);
    f[0] = -a;
    f[n] = 1;
    return f;
}

// ell * p^(i(i+1)/2) tail as in the degree-(p^N + 1) construction
IntPoly pleasants_like(long long p, int N, long long ell) {
    long long deg = 1;
    for (int i = 0; i < N; ++i) deg *= p;
    deg += 1;
    IntPoly f(deg + 1, 0);
    f[deg] = 1;
    for (long long i = 1; i <= deg; ++i)
        f[deg - i] = BigInt(ell) * bpow(p, i * (i + 1) / 2);
    return f;
}

} // namespace

TEST_CASE("gauss valuation") {
    CHECK(gauss_valuation({4, 0, 2}, 2) == 1);
    CHECK(gauss_valuation({18, 12}, 3) == 1);
    CHECK(gauss_valuation(pleasants_like(2, 3, 3), 2) == 0);
    CHECK_THROWS(gauss_valuation({}, 2));
}

TEST_CASE("phi development reconstructs and matches binomials") {
    // x^(2^m) - a0 developed at x-1 has coefficients binom(2^m, i)
    int m = 4;
    BigInt a0 = 17;
    auto dev = phi_development(binomial(1 << m, a0), {-1, 1}, 2);
    REQUIRE((int)dev.coeffs.size() == (1 << m) + 1);
    CHECK(dev.coeffs[0] == IntPoly{1 - a0});
    BigInt binom = 1;
    for (int i = 1; i <= (1 << m); ++i) {
        binom = binom * ((1 << m) - i + 1) / i;
        CHECK(dev.coeffs[i] == IntPoly{binom});
    }
    // phi = x gives back the coefficients
    auto devx = phi_development(binomial(5, 7), {0, 1}, 3);
    CHECK(devx.coeffs[0] == IntPoly{-7});
    CHECK(devx.coeffs[5] == IntPoly{1});
    // (x-1)^2 at x-1
    auto dev2 = phi_development({1, -2, 1}, {-1, 1}, 2);
    CHECK(dev2.coeffs[0].empty());
    CHECK(dev2.coeffs[1].empty());
    CHECK(dev2.coeffs[2] == IntPoly{1});
}

TEST_CASE("development reconstruction on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int dphi = 1 + (int)(rng() % 3);
        int df = dphi + (int)(rng() % 8);
        IntPoly phi(dphi + 1), f(df + 1);
        phi[dphi] = 1;
        f[df] = 1;
        for (int i = 0; i < dphi; ++i) phi[i] = (long long)(rng() % 41) - 20;
        for (int i = 0; i < df; ++i) f[i] = (long long)(rng() % 2001) - 1000;
        auto dev = phi_development(f, phi, 2);
        IntPoly acc, power{1};
        for (size_t i = 0; i < dev.coeffs.size(); ++i) {
            acc = isub(acc, isub({}, imul(dev.coeffs[i], power)));
            power = imul(power, phi);
        }
        IntPoly ftrim = f;
        itrim(ftrim);
        CHECK(acc == ftrim);
    }
}

TEST_CASE("principal polygon shapes") {
    // nine unit sides with slopes -9..-1
    auto dev = phi_development(pleasants_like(2, 3, 3), {0, 1}, 2);
    auto poly = principal_polygon(dev);
    REQUIRE(poly.sides.size() == 9);
    for (int i = 0; i < 9; ++i) {
        CHECK(poly.sides[i].length == 1);
        CHECK(poly.sides[i].e == 1);
        CHECK(poly.sides[i].h == 9 - i);
    }
    // slopes strictly increase
    for (size_t i = 0; i + 1 < poly.sides.size(); ++i) {
        auto& s = poly.sides[i];
        auto& t = poly.sides[i + 1];
        CHECK(s.h * t.e > t.h * s.e); // -h1/e1 < -h2/e2
    }

    // x^48 - 6 is 2-Eisenstein: one side of slope -1/48
    auto dev48 = phi_development(binomial(48, 6), {0, 1}, 2);
    auto poly48 = principal_polygon(dev48);
    REQUIRE(poly48.sides.size() == 1);
    CHECK(poly48.sides[0].h == 1);
    CHECK(poly48.sides[0].e == 48);
    CHECK(poly48.sides[0].length == 48);

    // x^(2^m) - a0 with w0 = m+1 at x-1: leftmost side length 2, slope -1
    int m = 3;
    auto dev17 = phi_development(binomial(1 << m, 17), {-1, 1}, 2);
    auto poly17 = principal_polygon(dev17);
    REQUIRE(!poly17.sides.empty());
    CHECK(poly17.sides[0].length == 2);
    CHECK(poly17.sides[0].h == 1);
    CHECK(poly17.sides[0].e == 1);
    CHECK(poly17.vertices.front() == std::pair<long long, long long>{0, m + 1});
}

TEST_CASE("residual polynomials") {
    // leftmost side of x^8 - 17 at x-1 has residual y^2 + y + 1 over F_2
    auto dev = phi_development(binomial(8, 17), {-1, 1}, 2);
    auto poly = principal_polygon(dev);
    ff::FqField F2(2, 1);
    auto rs = residual_polynomial(dev, poly, 0, F2);
    REQUIRE(rs.coeffs.size() == 3);
    CHECK(F2.eq(rs.coeffs[0], F2.one()));
    CHECK(F2.eq(rs.coeffs[1], F2.one()));
    CHECK(F2.eq(rs.coeffs[2], F2.one()));
    // Eisenstein side: linear residual with nonzero endpoints
    auto dev48 = phi_development(binomial(48, 6), {0, 1}, 2);
    auto poly48 = principal_polygon(dev48);
    auto rs48 = residual_polynomial(dev48, poly48, 0, F2);
    REQUIRE(rs48.coeffs.size() == 2);
    CHECK_FALSE(F2.is_zero(rs48.coeffs.front()));
    CHECK_FALSE(F2.is_zero(rs48.coeffs.back()));
}

TEST_CASE("ore shape") {
    auto r9 = ore_shape(pleasants_like(2, 3, 3), 2);
    REQUIRE(r9.conclusive);
    FactorShape nine;
    nine.add(1, 1, 9);
    CHECK(r9.shape == nine);

    auto r48 = ore_shape(binomial(48, 6), 2);
    REQUIRE(r48.conclusive);
    FactorShape eis;
    eis.add(48, 1, 1);
    CHECK(r48.shape == eis);

    auto r3 = ore_shape(binomial(3, 3), 2);
    REQUIRE(r3.conclusive);
    FactorShape s3;
    s3.add(1, 1, 1);
    s3.add(1, 2, 1);
    CHECK(r3.shape == s3);

    auto r33 = ore_shape(binomial(3, 10), 3);
    REQUIRE(r33.conclusive);
    FactorShape s33;
    s33.add(1, 1, 1);
    s33.add(2, 1, 1);
    CHECK(r33.shape == s33);

    // x^8 - 68: residual (y+1)^2 on the inner slope, needs a higher dissection
    auto r68 = ore_shape(binomial(8, 68), 2);
    CHECK_FALSE(r68.conclusive);
}

TEST_CASE("hensel lifting") {
    // square root of 17 at 2-adic precision 10, against brute force
    TruncatedPadic r = hensel_root({-17, 0, 1}, TruncatedPadic(2, 8, 1), 10);
    BigInt mod = bpow(2, 10);
    CHECK(bmod(r.value * r.value, mod) == 17);
    CHECK(bmod(r.value, 4) == 1);
    // roots mod 2^10 come in a pair congruent mod 2^9; the lift picks one of them
    bool found = false;
    for (BigInt c = 1; c < mod; c += 2)
        if (bmod(c * c, mod) == 17 && bmod(c, 4) == 1 && bmod(c, bpow(2, 9)) == bmod(r.value, bpow(2, 9)))
            found = true;
    CHECK(found);
    // x - c
    TruncatedPadic rc = hensel_root({-42, 1}, TruncatedPadic(3, 6, 42 % 729), 6);
    CHECK(rc.value == 42);
    // beta^4 = -15 (a0 = 15 has v2(a0+1) >= 4); 5^4 = 625 = 113 mod 128 starts the lift
    TruncatedPadic rb = hensel_root({15, 0, 0, 0, 1}, TruncatedPadic(2, 7, 5), 16);
    CHECK(bmod(rb.value * rb.value * rb.value * rb.value + 15, bpow(2, 16)) == 0);
    CHECK_THROWS_AS(hensel_root({-3, 0, 1}, TruncatedPadic(2, 10, 1), 10), std::runtime_error);
}

TEST_CASE("two_power_test agrees with the closed form") {
    CHECK(two_power_test(65, 4, 64));
    CHECK_FALSE(two_power_test(65, 5, 64));
    CHECK(two_power_test(3, 0, 64));
    CHECK_FALSE(two_power_test(3, 1, 64));
    CHECK(two_power_test(17, 2, 64));
    CHECK_FALSE(two_power_test(17, 3, 64));
    CHECK_THROWS(two_power_test(4, 1, 64));
    CHECK_THROWS(two_power_test(65, 62, 64));
    for (BigInt a0 = 3; a0 <= 2001; a0 += 2) {
        long long tmax = std::max<long long>(0, vp(a0 - 1, 2) - 2);
        for (long long t = 0; t <= 8; ++t)
            CHECK(two_power_test(a0, t, 64) == (t <= tmax));
    }
}

TEST_CASE("velez verification across cases") {
    struct Row {
        int m;
        BigInt a;
        std::string label;
        bool irreducible;
    };
    std::vector<Row> rows = {
        {1, 3, "odd.i", true},
        {4, 5, "odd.ii", true},        // w=2: stays irreducible
        {4, 41, "odd.ii", false},      // w=3: splits
        {4, 65, "odd.iii", false},
        {3, 6, "even.Eisenstein", true},
        {3, 12, "even.I.1", true},
        {3, 112, "even.I.2", true},
        {3, 28, "even.I.3", true},
        {3, 60, "even.I.4", false},
        {3, 20, "even.II", true},
        {4, 4352, "even.III.1", false},
        {3, 164, "even.III.2", false},
        {2, 68, "even.III.3", false},
        {4, 68, "even.III.4(k=1)", false},
        {4, 1040, "even.III.4", false},
        {2, BigInt(3) * bpow(2, 8), "even.IV0(odd.i)", true},
    };
    for (const auto& row : rows) {
        CAPTURE(row.m);
        CAPTURE(row.a.str());
        auto rep = verify_velez(row.m, row.a, 64);
        CHECK(rep.case_label == row.label);
        CHECK(rep.irreducible == row.irreducible);
        CHECK(rep.verified);
        CHECK(rep.product_ok);
        CHECK(rep.degrees_ok);
        long long total = 0;
        for (const auto& en : rep.shape.entries) total += en.e * en.f * en.count;
        CHECK(total == (1LL << row.m));
    }
    // case iii explicit factors for m=4, a=65
    auto rep65 = verify_velez(4, 65, 64);
    REQUIRE(rep65.factors.size() == 5);
    std::vector<int> degs;
    for (auto& g : rep65.factors) degs.push_back(ideg(g));
    CHECK(degs == std::vector<int>{1, 1, 2, 4, 8});
}

TEST_CASE("truncated p-adic arithmetic") {
    TruncatedPadic x(5, 6, 7);
    TruncatedPadic y(5, 4, 23);
    auto z = x.mul(y);
    CHECK(z.precision == 4);
    CHECK(z.value == bmod(BigInt(7) * 23, bpow(5, 4)));
    TruncatedPadic w(5, 6, 50);
    auto s = w.shift_down(2);
    CHECK(s.precision == 4);
    CHECK(s.value == 2);
    CHECK_THROWS(x.shift_down(1)); // 7 is a 5-adic unit
}

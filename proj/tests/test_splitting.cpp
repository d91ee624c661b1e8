#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "radix/ffpoly.hpp"
#include "radix/reference_table.hpp"
#include "radix/splitting.hpp"

using namespace radix;

namespace {

FactorShape make_shape(std::initializer_list<std::array<long long, 3>> triples) {
    FactorShape s;
    for (const auto& t : triples) s.add(t[0], t[1], t[2]);
    return s;
}

} // namespace

TEST_CASE("reference table rows reproduce exactly") {
    for (const auto& row : reference_table()) {
        CAPTURE(row.n);
        CAPTURE(row.a.str());
        auto rep = split(row.n, row.a, row.p);
        CHECK(rep.case_label == row.case_label);
        CHECK(rep.shape == row.shape);
        CHECK(rep.shape.degree_sum() == row.n);
    }
}

TEST_CASE("odd prime examples") {
    auto r1 = split(3, 2, 5);
    CHECK(r1.case_label == "odd.I");
    CHECK(r1.shape == make_shape({{1, 1, 1}, {1, 2, 1}}));

    auto r2 = split(3, 10, 3);
    CHECK(r2.case_label == "odd.III.i");
    CHECK(r2.shape == make_shape({{1, 1, 1}, {2, 1, 1}}));

    auto r3 = split(9, 100949, 59);
    CHECK(r3.case_label == "odd.II");
    CHECK(r3.shape == make_shape({{9, 1, 1}}));
    REQUIRE(!r3.notes.empty());
    CHECK(r3.notes[0].find("gcd(h, n) = 1") != std::string::npos);
    CHECK(r3.notes[0].find("gcd(v_p(a), n) = 1") != std::string::npos);

    auto r4 = split(2, 3, 7); // 3 is a quadratic nonresidue mod 7
    CHECK(r4.case_label == "odd.I");
    CHECK(r4.shape == make_shape({{1, 2, 1}}));

    // deep congruence: w > m + 1 caps the tower
    auto r5 = split(3, 26, 3);
    CHECK(r5.case_label == "odd.III.ii");
    CHECK(r5.shape == make_shape({{1, 1, 1}, {2, 1, 1}}));

    // p | n, p | a, p | v_p(a)
    auto r6 = split(9, 54, 3);
    CHECK(r6.case_label == "odd.IV");
    CHECK(r6.shape == make_shape({{9, 1, 1}}));

    auto r7 = split(9, BigInt(17) * 27, 3); // w0 = 2 gives one ramified layer
    CHECK(r7.case_label == "odd.IV");
    CHECK(r7.shape == make_shape({{3, 1, 1}, {6, 1, 1}}));
}

TEST_CASE("two-adic edge patterns") {
    // w = v_2(a - 1) > m + 1 with m = 2
    auto r1 = split(4, 17, 2);
    CHECK(r1.case_label == "2.III.iii");
    CHECK(r1.shape == make_shape({{1, 1, 2}, {2, 1, 1}}));

    // t = k = 1: two copies, no degree-two-residue block
    auto r2 = split(8, BigInt(41) * 4, 2);
    CHECK(r2.case_label == "2.IV.iii.2");
    CHECK(r2.shape == make_shape({{4, 1, 2}}));
    REQUIRE(!r2.notes.empty());
    CHECK(r2.notes[0].find("t = 1") != std::string::npos);

    // t > k = 1 with m >= 3: again two copies
    auto r3 = split(16, BigInt(65) * 4, 2);
    CHECK(r3.case_label == "2.IV.iii.4");
    CHECK(r3.shape == make_shape({{8, 1, 2}}));

    // w = 2 leaves the layer product empty
    auto r4 = split(48, 5, 2);
    REQUIRE(!r4.notes.empty());
    CHECK(r4.notes[0].find("empty") != std::string::npos);
}

TEST_CASE("power reduction is flagged") {
    auto rep = split(4, 32, 2);
    CHECK(rep.reduced);
    CHECK(rep.removed_root == 2);
    CHECK(rep.case_label == "2.II");
    CHECK(rep.shape == make_shape({{4, 1, 1}}));
    CHECK_THROWS_AS(split(4, -4, 2), std::invalid_argument);
    CHECK_THROWS_AS(split(3, 3, BigInt(6)), std::invalid_argument);
    CHECK_THROWS_AS(split_odd(RadicalInput::make(3, 3), 2), std::invalid_argument);
}

TEST_CASE("unramified cases mirror the binomial factorization") {
    std::mt19937_64 rng(11);
    ff::FqField F2(2, 1);
    for (int trial = 0; trial < 60; ++trial) {
        long long n = 3 + 2 * (long long)(rng() % 30); // odd degree
        BigInt a = BigInt(3 + 2 * (long long)(rng() % 5000));
        RadicalInput in;
        try {
            in = RadicalInput::make(n, a);
        } catch (const std::invalid_argument&) {
            continue;
        }
        auto rep = split2(in);
        REQUIRE(rep.case_label == "2.I");
        auto dist = ff::binomial_distribution(n, F2.from_int(a), F2);
        std::map<long long, long long> got;
        for (const auto& en : rep.shape.entries) {
            CHECK(en.e == 1);
            got[en.f] += en.count;
        }
        CHECK(got == dist.counts);
    }
}

TEST_CASE("large power of two in the radicand reduces to the odd part") {
    // k >= m: shape equals the odd-radicand shape on degree 2^m * gcd(h, n0),
    // with every exponent scaled by n0 / gcd(h, n0)
    struct Grid {
        int m;
        long long n0;
        long long h;
        BigInt a0;
    };
    std::vector<Grid> grid = {
        {2, 3, 1, 3}, {2, 3, 3, 5}, {3, 5, 5, 17}, {3, 5, 1, 65},
        {2, 9, 3, 7}, {4, 3, 3, 97}, {2, 15, 5, 33},
    };
    for (const auto& g : grid) {
        for (int k = g.m; k <= g.m + 1; ++k) {
            long long n = (1LL << g.m) * g.n0;
            BigInt a = g.a0 * bpow(2, g.h << k);
            long long d = std::gcd(g.h, g.n0);
            auto rep = split2(RadicalInput::make(n, a));
            CAPTURE(n);
            CAPTURE(a.str());
            CHECK(rep.case_label.substr(0, 7) == "2.IV.0.");
            auto base = split2(RadicalInput::make((1LL << g.m) * d, g.a0));
            FactorShape scaled;
            for (const auto& en : base.shape.entries)
                scaled.add(en.e * (g.n0 / d), en.f, en.count);
            CHECK(rep.shape == scaled);
        }
    }
}

TEST_CASE("oracle cross-checks") {
    auto a1 = validate_against_oracle(RadicalInput::make(48, 6), 2);
    CHECK(a1.oracle_conclusive);
    CHECK(a1.agree);
    CHECK(a1.velez_run);
    CHECK(a1.velez_ok);

    auto a2 = validate_against_oracle(RadicalInput::make(3, 3), 2);
    CHECK(a2.oracle_conclusive);
    CHECK(a2.agree);
    CHECK_FALSE(a2.velez_run);

    // deep congruence a = 65 at n = 16: every side of the polygon at x-1
    // still has a degree-one residual, so the first dissection resolves it
    auto a3 = validate_against_oracle(RadicalInput::make(16, 65), 2);
    CHECK(a3.oracle_conclusive);
    CHECK(a3.agree);

    auto a4 = validate_against_oracle(RadicalInput::make(8, 164), 2);
    CHECK(a4.velez_run);
    CHECK(a4.velez_ok);
    CHECK(a4.velez_label == "even.III.2");
}

TEST_CASE("randomized shape identity and leaf labels") {
    const std::set<std::string> leaves = {
        "2.I",        "2.II",       "2.III.i",    "2.III.ii",  "2.III.iii",
        "2.IV.0.1",   "2.IV.0.2",   "2.IV.0.3",   "2.IV.i.1",  "2.IV.i.2",
        "2.IV.i.3",   "2.IV.ii",    "2.IV.iii.1", "2.IV.iii.2", "2.IV.iii.3",
        "2.IV.iii.4", "odd.I",      "odd.II",     "odd.III.i", "odd.III.ii",
        "odd.IV"};
    std::mt19937_64 rng(23);
    const long long primes[] = {2, 3, 5, 7, 11, 13};
    int done = 0;
    while (done < 400) {
        long long n = 2 + (long long)(rng() % 59);
        BigInt a = BigInt((long long)(rng() % 2000000000LL) - 1000000000LL);
        if (a == 0) continue;
        long long p = primes[rng() % 6];
        NormalizedInput norm;
        try {
            norm = normalize_input(n, a);
        } catch (const std::invalid_argument&) {
            continue;
        }
        CAPTURE(n);
        CAPTURE(a.str());
        CAPTURE(p);
        auto agreement = validate_against_oracle(norm.input, p);
        CHECK(agreement.report.shape.degree_sum() == norm.input.n);
        CHECK(leaves.count(agreement.report.case_label) == 1);
        if (agreement.oracle_conclusive) CHECK(agreement.agree);
        ++done;
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "radix/indexdiv.hpp"
#include "radix/splitting.hpp"

using namespace radix;

TEST_CASE("lambda profile counts primes per residue degree") {
    auto sh = split(48, 65, 2).shape;
    auto lam = lambda_profile(sh).lambda;
    REQUIRE(lam.size() == 2);
    CHECK(lam[1] == 5);
    CHECK(lam[2] == 5);

    FactorShape ram;
    ram.add(48, 1, 1);
    CHECK(lambda_profile(ram).lambda == std::map<long long, long long>{{1, 1}});
    CHECK_THROWS(lambda_profile(FactorShape{}));
}

TEST_CASE("splitting criterion") {
    FactorShape nine;
    nine.add(1, 1, 9);
    CHECK(is_cnid(nine, 2, 3));        // 9 > 8 degree-1 options
    CHECK_FALSE(is_cnid(nine, 2, 4));  // 9 <= 16

    auto sh17 = split(4, 17, 2).shape; // three degree-1 primes
    CHECK(is_cnid(sh17, 2, 1));
    CHECK_FALSE(is_cnid(sh17, 2, 2));

    FactorShape quad;
    quad.add(8, 2, 3); // three degree-2 primes vs the single quadratic mod 2
    CHECK(is_cnid(quad, 2, 1));
    CHECK_FALSE(is_cnid(quad, 2, 2));
}

TEST_CASE("closed-form verdicts on worked examples") {
    // the doubling family: n = 2^(2^N), a = 4n + 1
    for (int N = 1; N <= 3; ++N) {
        long long n = 1LL << (1 << N);
        auto in = RadicalInput::make(n, BigInt(4) * n + 1);
        CHECK(cnid_formula(in, 2, N));
        CHECK_FALSE(cnid_formula(in, 2, N + 1));
    }
    // odd degree shields 2
    CHECK_FALSE(cnid_formula(RadicalInput::make(9, 5), 2, 1));
    CHECK_FALSE(cnid_formula(RadicalInput::make(3, 3), 2, 1));
    // no common index divisors at all
    for (long long p : {2, 3, 5, 7})
        CHECK_FALSE(cnid_formula(RadicalInput::make(9, 100949), p, 1));
    // degree-2-block cases over the quartic residue field
    CHECK(cnid_formula(RadicalInput::make(48, 448), 2, 1));  // three degree-2 primes
    CHECK(cnid_formula(RadicalInput::make(48, 320), 2, 1));
    CHECK(cnid_formula(RadicalInput::make(48, 5), 2, 1));
    CHECK_FALSE(cnid_formula(RadicalInput::make(48, 448), 2, 2));
}

TEST_CASE("common index divisor sets") {
    CHECK(common_index_divisors(RadicalInput::make(48, 41), 1) == std::vector<long long>{2});
    CHECK(common_index_divisors(RadicalInput::make(9, 100949), 1).empty());
    CHECK(common_index_divisors(RadicalInput::make(4, 17), 1) == std::vector<long long>{2});
    CHECK(common_index_divisors(RadicalInput::make(16, 65), 2) == std::vector<long long>{2});
}

TEST_CASE("generator counts") {
    for (int N = 1; N <= 3; ++N) {
        long long n = 1LL << (1 << N);
        auto g = min_generators(RadicalInput::make(n, BigInt(4) * n + 1));
        CHECK(g.generators == N + 1);
        CHECK(g.max_n == N);
        CHECK(g.certainty == "exact (family)");
    }
    auto g1 = min_generators(RadicalInput::make(3, 3));
    CHECK(g1.generators == 1);
    CHECK(g1.certainty == "certified-lower-bound");
    auto g2 = min_generators(RadicalInput::make(48, 6));
    CHECK(g2.generators == 1);
    auto g3 = min_generators(RadicalInput::make(48, 41));
    CHECK(g3.generators == 2);
    CHECK(g3.certainty == "certified-lower-bound");
}

TEST_CASE("formula path equals splitting criterion, with monotonicity") {
    std::mt19937_64 rng(37);
    int done = 0;
    while (done < 250) {
        long long n = 2 + (long long)(rng() % 119);
        BigInt a = BigInt((long long)(rng() % 20000000000LL) - 10000000000LL);
        if (a == 0) continue;
        RadicalInput in;
        try {
            in = RadicalInput::make(n, a);
        } catch (const std::invalid_argument&) {
            continue;
        }
        CAPTURE(n);
        CAPTURE(a.str());
        for (long long p : prime_divisors(n)) {
            auto shape = split(in, p).shape;
            bool prev = true;
            for (int N = 1; N <= 4; ++N) {
                bool formula = cnid_formula(in, p, N);
                CHECK(formula == is_cnid(shape, p, N));
                // a deeper obstruction implies every shallower one
                if (formula) CHECK(prev);
                prev = formula;
                if (bpow(p, N) >= n) CHECK_FALSE(formula);
            }
        }
        ++done;
    }
}

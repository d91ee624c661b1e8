#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radix/arith.hpp"

using namespace radix;

TEST_CASE("vp basics") {
    CHECK(vp(48, 2) == 4);
    CHECK(vp(48, 3) == 1);
    CHECK(vp(-96, 2) == 5);
    CHECK(vp(7, 5) == 0);
    CHECK(vp(bpow(2, 200) * 3, 2) == 200);
    CHECK_THROWS(vp(0, 2));
    CHECK_THROWS(vp(12, 4));
}

TEST_CASE("power_free_reduce") {
    auto [a1, b1] = power_free_reduce(32, 3);
    CHECK(a1 == 4);
    CHECK(b1 == 2);
    auto [a2, b2] = power_free_reduce(-64, 2);
    CHECK(a2 == -1);
    CHECK(b2 == 8);
    auto [a3, b3] = power_free_reduce(17, 5);
    CHECK(a3 == 17);
    CHECK(b3 == 1);
    auto [a4, b4] = power_free_reduce(BigInt(1000000007) * 1000000007 * 12, 2);
    CHECK(a4 == 3);
    CHECK(b4 == BigInt(1000000007) * 2);
    // smooth huge input
    auto [a5, b5] = power_free_reduce(bpow(2, 160) * 3, 80);
    CHECK(a5 == bpow(2, 160) * 3 / bpow(bpow(2, 2), 80));
    CHECK(b5 == 4);
}

TEST_CASE("irreducibility of x^n - a") {
    CHECK(is_irreducible_radical(48, 6));
    CHECK(is_irreducible_radical(2, -1));
    CHECK_FALSE(is_irreducible_radical(4, -4));       // x^4+4 = (x^2-2x+2)(x^2+2x+2)
    CHECK_FALSE(is_irreducible_radical(8, -64));      // -64 = -4 * 2^4
    CHECK_FALSE(is_irreducible_radical(6, 64));
    CHECK_FALSE(is_irreducible_radical(6, -64));      // -64 = (-4)^3
    CHECK(is_irreducible_radical(6, -2));
    CHECK(is_irreducible_radical(3, -8) == false);
    CHECK(is_irreducible_radical(5, 32) == false);
    CHECK(is_irreducible_radical(5, 33));
}

TEST_CASE("RadicalInput validation") {
    auto in = RadicalInput::make(48, 6);
    CHECK(in.m == 4);
    CHECK(in.n0 == 3);
    CHECK_THROWS(RadicalInput::make(2, 4));
    CHECK_THROWS(RadicalInput::make(4, -4));
    auto norm = normalize_input(3, 24);
    CHECK(norm.reduced);
    CHECK(norm.removed_root == 2);
    CHECK(norm.input.a == 24); // the radicand is kept as given, only flagged
}

TEST_CASE("two-adic profile") {
    auto in = RadicalInput::make(48, 41);
    auto pr = profile2(in);
    CHECK(pr.w.has_value());
    CHECK(*pr.w == 3);
    CHECK(pr.w0 == 3);
    CHECK(pr.t == 1);
    CHECK(pr.d == 3);
    CHECK_FALSE(pr.h.has_value());

    auto in2 = RadicalInput::make(80, bpow(2, 20) * 33);
    auto pr2 = profile2(in2);
    REQUIRE(pr2.h.has_value());
    CHECK(*pr2.h == 5);
    CHECK(*pr2.k == 2);
    CHECK(pr2.a0 == 33);
    CHECK(pr2.w0 == 5);
    CHECK(pr2.t == 3);
    CHECK(pr2.d == 5);
}

TEST_CASE("odd profile") {
    auto in = RadicalInput::make(5, BigInt(11) * 13 * 13 * 13 * 13);
    auto pr = profile_odd(in, 5);
    CHECK(pr.m == 1);
    CHECK(pr.n0 == 1);
    CHECK_FALSE(pr.h.has_value());
    REQUIRE(pr.w.has_value());
    CHECK(*pr.w == 1);

    auto in2 = RadicalInput::make(9, 100949);
    auto pr2 = profile_odd(in2, 3);
    CHECK(pr2.m == 2);
    CHECK(pr2.n0 == 1);

    auto in3 = RadicalInput::make(9, BigInt(2) * bpow(3, 3));
    auto pr3 = profile_odd(in3, 3);
    REQUIRE(pr3.h.has_value());
    CHECK(*pr3.h == 1);
    CHECK(*pr3.k == 1);
    CHECK(pr3.a0 == 2);
    REQUIRE(pr3.c.has_value());
}

TEST_CASE("small number theory helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(mul_order(2, 7) == 3);
    CHECK(iroot(BigInt(1000000), 3) == 100);
    CHECK(is_probable_prime(BigInt("170141183460469231731687303715884105727")));
}

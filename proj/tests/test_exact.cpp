#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asq/exact.hpp"

#include <random>

using namespace asq;

TEST_CASE("mk_rational canonicalizes") {
    CHECK(mk_rational(1, 2) == mk_rational(1, 2));
    CHECK(num(mk_rational(55, 100)) == 11);
    CHECK(den(mk_rational(55, 100)) == 20);
    CHECK(num(mk_rational(3, -6)) == -1);
    CHECK(den(mk_rational(3, -6)) == 2);
    CHECK_THROWS_AS(mk_rational(1, 0), std::domain_error);
}

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
    CHECK(parse_rational("11/20") == mk_rational(11, 20));
    CHECK(parse_rational("0.55") == mk_rational(11, 20));
    CHECK(parse_rational("0.50") == mk_rational(1, 2));
    CHECK(parse_rational("1") == mk_rational(1, 1));
    CHECK(parse_rational("1.00") == mk_rational(1, 1));
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("x"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("1/"), std::domain_error);
}

TEST_CASE("isqrt on known values") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1369) == 37);
    CHECK(isqrt(2208) == 46);
    CHECK_THROWS_AS(isqrt(BigInt(-1)), std::domain_error);
}

TEST_CASE("isqrt bracketing on random huge inputs") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20240517ul);
    for (int i = 0; i < 100000; ++i) {
        BigInt n = rng.get_z_bits(1 + (i % 1024));
        BigInt s = isqrt(n);
        REQUIRE(s * s <= n);
        REQUIRE((s + 1) * (s + 1) > n);
    }
}

TEST_CASE("floor_mul_sq and ceil_mul_sq") {
    CHECK(floor_mul_sq(mk_rational(1, 2), 5) == 12);
    CHECK(floor_mul_sq(mk_rational(1, 2), 12) == 72);
    CHECK(floor_mul_sq(mk_rational(1, 10), 4) == 1);
    CHECK(ceil_mul_sq(mk_rational(1, 5), 3) == 2);
    CHECK(ceil_mul_sq(mk_rational(4, 29), 12) == 20);
    CHECK(ceil_mul_sq(mk_rational(1, 1), 7) == 49);
    CHECK_THROWS_AS(floor_mul_sq(mk_rational(0, 1), 3), std::domain_error);
    CHECK_THROWS_AS(ceil_mul_sq(mk_rational(-1, 2), 3), std::domain_error);
}

TEST_CASE("frac_part_mul exact values") {
    CHECK(frac_part_mul(mk_rational(1, 2), 9) == mk_rational(1, 2));
    CHECK(frac_part_mul(mk_rational(4, 29), 144) == mk_rational(25, 29));
    CHECK(frac_part_mul(mk_rational(1, 3), 6) == 0);
}

TEST_CASE("square_in_range") {
    CHECK_FALSE(square_in_range(6, 7).has_value());
    CHECK(square_in_range(1368, 1369).value() == 37);
    CHECK(square_in_range(0, 0).value() == 0);
    CHECK_FALSE(square_in_range(5, 3).has_value());
    CHECK(square_in_range(BigInt(-10), 0).value() == 0);
}

TEST_CASE("exactness properties of the alpha*n^2 brackets") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        BigInt p = 1 + static_cast<unsigned long>(rng() % 999);
        BigInt q = p + 1 + static_cast<unsigned long>(rng() % 999);
        Rational a = mk_rational(p, q);
        BigInt n = 1 + static_cast<unsigned long>(rng() % 10000);

        BigInt fl = floor_mul_sq(a, n);
        Rational exact = a * Rational(n * n);
        REQUIRE(Rational(fl) <= exact);
        REQUIRE(exact < Rational(fl + 1));

        BigInt cl = ceil_mul_sq(a, n);
        BigInt gap = (num(a) * n * n) % den(a) == 0 ? 0 : 1;
        REQUIRE(cl == fl + gap);

        Rational f = frac_part_mul(a, n);
        REQUIRE(f + Rational(floor_div(num(a) * n, den(a))) == a * Rational(n));
        REQUIRE(f >= 0);
        REQUIRE(f < 1);
    }
}

TEST_CASE("min_witness_index") {
    CHECK(min_witness_index(mk_rational(1, 1)) == 1);
    CHECK(min_witness_index(mk_rational(1, 2)) == 2);
    CHECK(min_witness_index(mk_rational(4, 49)) == 4);
    CHECK(min_witness_index(mk_rational(1, 100)) == 10);
    CHECK(min_witness_index(mk_rational(1, 101)) == 11);
}

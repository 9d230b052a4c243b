#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asq/membership.hpp"
#include "support/reference.hpp"

#include <algorithm>
#include <random>

using namespace asq;

TEST_CASE("in_S on known values") {
    auto w = in_S(mk_rational(1, 2), 24);
    CHECK(w.member);
    CHECK(w.witness.value() == 7);
    CHECK_FALSE(in_S(mk_rational(1, 2), 3).member);
    auto sq = in_S(mk_rational(1, 1), 25);
    CHECK(sq.member);
    CHECK(sq.witness.value() == 5);
    CHECK_THROWS_AS(in_S(mk_rational(1, 2), 0), std::domain_error);
    CHECK_THROWS_AS(in_S(mk_rational(1, 2), BigInt(-4)), std::domain_error);
    CHECK_THROWS_AS(in_S(mk_rational(3, 2), 4), std::domain_error);
}

TEST_CASE("in_Sbar on known values") {
    auto w = in_Sbar(mk_rational(1, 5), 2);
    CHECK(w.member);
    CHECK(w.witness.value() == 3);
    CHECK_FALSE(in_Sbar(mk_rational(1, 5), 3).member);
    auto big = in_Sbar(mk_rational(4, 29), 716);
    CHECK(big.member);
    CHECK(big.witness.value() == 72);
}

TEST_CASE("oracles agree with the direct scan up to 1e5") {
    for (const char* a : {"1/10", "1/2", "11/20"}) {
        const Rational alpha = parse_rational(a);
        const std::uint64_t limit = 100000;
        for (const bool ceiling : {false, true}) {
            const auto marks = testing::linear_scan_set(alpha, limit, ceiling);
            const auto first = testing::linear_scan_witness(alpha, limit, ceiling);
            for (std::uint64_t m = 1; m <= limit; ++m) {
                const auto w = ceiling ? in_Sbar(alpha, m) : in_S(alpha, m);
                REQUIRE(w.member == marks[m]);
                if (w.member) REQUIRE(w.witness.value() == first[m]);
            }
        }
    }
}

TEST_CASE("verify_T_tuple on table witnesses") {
    const Rational half = mk_rational(1, 2);
    CHECK(verify_T_tuple(half, {3, 3, 3}).verified);
    auto rec = verify_T_tuple(half, {12, 12, 71});
    CHECK(rec.verified);
    CHECK(rec.values[0] == 72);
    CHECK(rec.values[2] == 2520);
    CHECK(rec.failing_sums().empty());
    auto bad = verify_T_tuple(half, {3, 3, 4});
    CHECK_FALSE(bad.verified);
    CHECK_FALSE(bad.failing_sums().empty());
}

TEST_CASE("verify_T_tuple preconditions") {
    CHECK_THROWS_AS(verify_T_tuple(mk_rational(1, 2), {1, 3, 3}), std::domain_error);
    CHECK_THROWS_AS(verify_T_tuple(mk_rational(1, 2), {0, 3, 3}), std::domain_error);
}

TEST_CASE("verify_Tbar_tuple") {
    auto rec = verify_Tbar_tuple(mk_rational(4, 29), {12, 12, 71});
    CHECK(rec.verified);
    CHECK(rec.values[0] == 20);
    CHECK(rec.values[2] == 696);
    // smallest witnesses of the seven sums
    std::vector<BigInt> got;
    for (const auto& c : rec.checks) got.push_back(c.membership.witness.value());
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    CHECK(got == std::vector<BigInt>{12, 17, 71, 72, 73});

    CHECK_FALSE(verify_Tbar_tuple(mk_rational(1, 5), {2, 2, 1}).verified);
    CHECK_FALSE(verify_Tbar_tuple(mk_rational(1, 1), {3, 4, 12}).verified);
}

TEST_CASE("verification is permutation invariant") {
    std::mt19937_64 rng(99);
    const Rational alpha = mk_rational(11, 20);
    for (int i = 0; i < 200; ++i) {
        std::array<BigInt, 3> idx = {2 + static_cast<unsigned long>(rng() % 40),
                                     2 + static_cast<unsigned long>(rng() % 40),
                                     2 + static_cast<unsigned long>(rng() % 40)};
        const bool base = verify_T_tuple(alpha, idx).verified;
        std::sort(idx.begin(), idx.end());
        do {
            REQUIRE(verify_T_tuple(alpha, idx).verified == base);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
}

TEST_CASE("membership cache matches the oracle") {
    for (const bool ceiling : {false, true}) {
        const Rational alpha = mk_rational(2, 7);
        MembershipCache cache(alpha, 5000, ceiling);
        for (std::uint64_t m = 1; m <= 5000; ++m) {
            const bool oracle = (ceiling ? in_Sbar(alpha, m) : in_S(alpha, m)).member;
            REQUIRE(cache.contains(m) == oracle);
        }
    }
    CHECK_THROWS_AS(MembershipCache(mk_rational(1, 2), MembershipCache::kMaxBits + 5, false),
                    std::length_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asq/homog.hpp"

#include <random>

using namespace asq;

TEST_CASE("eta on the three brackets") {
    CHECK(eta(BracketKind::Floor, mk_rational(7, 3)) == mk_rational(1, 3));
    CHECK(eta(BracketKind::Ceiling, mk_rational(7, 3)) == mk_rational(2, 3));
    CHECK(eta(BracketKind::Nearest, mk_rational(1, 2)) == mk_rational(1, 2));
    CHECK(apply_bracket(BracketKind::Nearest, mk_rational(1, 2)) == 1);  // ties up
    CHECK(apply_bracket(BracketKind::Nearest, mk_rational(-1, 2)) == 0);
    CHECK(apply_bracket(BracketKind::Floor, mk_rational(-7, 3)) == -3);
    CHECK(apply_bracket(BracketKind::Ceiling, mk_rational(-7, 3)) == -2);
}

TEST_CASE("bracket axioms hold exactly on random rationals") {
    std::mt19937_64 rng(31337);
    const BracketKind kinds[] = {BracketKind::Floor, BracketKind::Ceiling,
                                 BracketKind::Nearest};
    for (int i = 0; i < 10000; ++i) {
        const long p = static_cast<long>(rng() % 2001) - 1000;
        const unsigned long q = 1 + rng() % 97;
        const Rational x = mk_rational(p, q);
        const unsigned long n = 1 + rng() % 16;
        for (const BracketKind k : kinds) {
            REQUIRE(eta(k, x) == eta(k, x + 1));                    // periodicity
            REQUIRE(eta(k, Rational(BigInt(p))) == 0);              // vanishing on Z
            REQUIRE(eta(k, Rational(n) * x) <= Rational(n) * eta(k, x));  // subadditive scaling
        }
    }
}

TEST_CASE("homogeneous polynomial validation and evaluation") {
    auto f = pythagorean_poly();
    CHECK(f.degree == 2);
    const std::vector<BigInt> pyth = {3, 4, 5};
    CHECK(f.eval(pyth) == 0);
    CHECK_THROWS_AS(f.eval(std::vector<BigInt>{1, 2}), std::domain_error);
    CHECK_THROWS_AS(HomPoly::make(2, {HomPoly::Term{1, {1, 0}}, HomPoly::Term{1, {1, 1}}}),
                    std::domain_error);
    CHECK_THROWS_AS(HomPoly::make(1, {HomPoly::Term{0, {2}}}), std::domain_error);
}

TEST_CASE("termwise bracket evaluation") {
    auto f = pythagorean_poly();
    const std::vector<BigInt> pyth = {3, 4, 5};
    CHECK(bracket_poly_eval(f, mk_rational(1, 1), pyth, BracketKind::Floor) == 0);
    CHECK(bracket_poly_eval(f, mk_rational(1, 2), pyth, BracketKind::Floor) == 0);

    // with alpha = 1 and floor, this is exact evaluation on integer points
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        std::vector<BigInt> pt = {static_cast<unsigned long>(rng() % 50),
                                  static_cast<unsigned long>(rng() % 50),
                                  static_cast<unsigned long>(rng() % 50)};
        REQUIRE(bracket_poly_eval(f, mk_rational(1, 1), pt, BracketKind::Floor) == f.eval(pt));
    }

    const auto system = euler_brick_system();
    const std::vector<BigInt> brick = {240, 117, 44, 267, 244, 125};
    for (const auto& g : system) {
        CHECK(g.eval(brick) == 0);
        CHECK(bracket_poly_eval(g, mk_rational(1, 1), brick, BracketKind::Floor) == 0);
    }
}

TEST_CASE("termwise bracket stays within the eta budget") {
    // |alpha f(nw) - [[alpha f]](nw)| <= sum of per-term coefficient * eta
    std::mt19937_64 rng(99);
    const auto f = pythagorean_poly();
    const std::vector<BigInt> w = {3, 4, 5};
    for (int i = 0; i < 300; ++i) {
        const Rational alpha = mk_rational(1 + static_cast<unsigned long>(rng() % 500),
                                           1 + static_cast<unsigned long>(rng() % 500));
        const unsigned long n = 1 + rng() % 40;
        std::vector<BigInt> pt;
        for (const auto& c : w) pt.push_back(c * n);
        Rational exact = alpha * Rational(f.eval(pt));
        Rational bracketed(bracket_poly_eval(f, alpha, pt, BracketKind::Floor));
        Rational gap = exact - bracketed;
        if (gap < 0) gap = -gap;
        Rational budget = 0;
        for (const auto& t : f.terms) {
            BigInt mono = 1;
            for (unsigned v = 0; v < f.arity; ++v)
                for (unsigned e = 0; e < t.exponents[v]; ++e) mono *= pt[v];
            Rational coeff(t.coefficient < 0 ? -t.coefficient : t.coefficient);
            budget += coeff * eta(BracketKind::Floor, alpha * Rational(mono));
        }
        REQUIRE(gap <= budget);
    }
}

TEST_CASE("multiplier scan") {
    const auto f = pythagorean_poly();
    const std::vector<HomPoly> F = {f};
    const std::vector<BigInt> w = {3, 4, 5};
    auto scan = scan_multipliers(F, w, mk_rational(1, 2), 10, BracketKind::Floor);
    CHECK(scan.qualifying.size() == 10);
    CHECK(scan.density == doctest::Approx(1.0));

    const std::vector<BigInt> not_witness = {1, 1, 1};
    CHECK_THROWS_AS(scan_multipliers(F, not_witness, mk_rational(1, 2), 10, BracketKind::Floor),
                    std::domain_error);

    // rational branch: density at least floor(N/q)/N
    const auto system = euler_brick_system();
    const std::vector<BigInt> brick = {240, 117, 44, 267, 244, 125};
    for (const char* a : {"1/3", "2/7"}) {
        const Rational alpha = parse_rational(a);
        auto s = scan_multipliers(system, brick, alpha, 200, BracketKind::Floor);
        const double bound = std::floor(200.0 / den(alpha).get_d()) / 200.0;
        CHECK(s.density >= bound);
        // multiples of q always qualify
        for (std::uint64_t n = den(alpha).get_ui(); n <= 200; n += den(alpha).get_ui())
            REQUIRE(std::find(s.qualifying.begin(), s.qualifying.end(), n) !=
                    s.qualifying.end());
    }

    // ceiling and nearest kinds run the same machinery
    for (const BracketKind k : {BracketKind::Ceiling, BracketKind::Nearest}) {
        auto sk = scan_multipliers(F, w, mk_rational(1, 3), 30, BracketKind(k));
        CHECK(sk.density >= 10.0 / 30.0);
    }
}

TEST_CASE("bridge from a certificate to verified tuples") {
    const std::vector<BigInt> sub = {240, 117, 44, 267, 244, 125};
    auto emits = T_alpha_bridge(sub, mk_rational(1, 2), 20);
    REQUIRE(!emits.empty());
    // every even multiplier qualifies; records certify the six pair-level sums
    std::vector<std::uint64_t> ns;
    for (const auto& e : emits) ns.push_back(e.n);
    for (std::uint64_t n = 2; n <= 20; n += 2)
        REQUIRE(std::find(ns.begin(), ns.end(), n) != ns.end());
    for (const auto& e : emits) {
        for (int i = 0; i < 6; ++i) REQUIRE(e.record.checks[i].membership.member);
        // the triple sum has no certificate; the record stays honest about it
        if (!e.record.verified) {
            auto fails = e.record.failing_sums();
            REQUIRE(fails == std::vector<std::string>{"k+l+m"});
        }
    }

    // rational alpha: n = q always qualifies (all brackets exact)
    auto e7 = T_alpha_bridge(sub, mk_rational(2, 7), 7);
    bool has7 = false;
    for (const auto& e : e7) has7 = has7 || e.n == 7;
    CHECK(has7);

    // full certificates do not exist; a failing identity is named
    const std::vector<BigInt> fake = {240, 117, 44, 267, 244, 125, 999};
    CHECK_THROWS_WITH_AS(T_alpha_bridge(fake, mk_rational(1, 2), 5),
                         doctest::Contains("k^2+l^2+m^2=d^2"), std::domain_error);
    const std::vector<BigInt> broken = {3, 4, 4, 5, 5, 5};
    CHECK_THROWS_AS(T_alpha_bridge(broken, mk_rational(1, 2), 5), std::domain_error);
    const std::vector<BigInt> short_witness = {3, 4, 5};
    CHECK_THROWS_AS(T_alpha_bridge(short_witness, mk_rational(1, 2), 5), std::domain_error);
}

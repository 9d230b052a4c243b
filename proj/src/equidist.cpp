#include "asq/equidist.hpp"

#include <mpfr.h>

namespace asq {

std::vector<FracPoint2> frac_sequence(const Rational& alpha, std::uint64_t N) {
    if (alpha <= 0) throw std::domain_error("frac_sequence: alpha must be positive");
    std::vector<FracPoint2> pts;
    pts.reserve(N);
    for (std::uint64_t n = 1; n <= N; ++n) {
        BigInt y = pell(2 * n);
        BigInt y2 = y * y;
        BigInt w = y2 / 2;  // P_{2n} is even
        pts.push_back(FracPoint2{frac_part_mul(alpha, w * w), frac_part_mul(alpha, y2), n});
    }
    return pts;
}

double weyl_sum(std::int64_t h1, std::int64_t h2, const Rational& alpha, std::uint64_t N) {
    if (h1 == 0 && h2 == 0) throw std::domain_error("weyl_sum: (h1,h2) must be nonzero");
    if (N < 1) throw std::domain_error("weyl_sum: N must be >= 1");
    const auto pts = frac_sequence(alpha, N);

    const mpfr_prec_t prec = 192;
    mpfr_t re, im, theta, two_pi, c, s;
    mpfr_inits2(prec, re, im, theta, two_pi, c, s, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(two_pi, MPFR_RNDN);
    mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    for (const auto& pt : pts) {
        // phase = {h1 u + h2 v} keeps the argument small and exact.
        Rational phase = frac_part(h1 * pt.u + h2 * pt.v);
        mpfr_set_q(theta, phase.get_mpq_t(), MPFR_RNDN);
        mpfr_mul(theta, theta, two_pi, MPFR_RNDN);
        mpfr_sin_cos(s, c, theta, MPFR_RNDN);
        mpfr_add(re, re, c, MPFR_RNDN);
        mpfr_add(im, im, s, MPFR_RNDN);
    }
    mpfr_sqr(c, re, MPFR_RNDN);
    mpfr_sqr(s, im, MPFR_RNDN);
    mpfr_add(c, c, s, MPFR_RNDN);
    mpfr_sqrt(c, c, MPFR_RNDN);
    mpfr_div_ui(c, c, static_cast<unsigned long>(N), MPFR_RNDN);
    const double result = mpfr_get_d(c, MPFR_RNDN);
    mpfr_clears(re, im, theta, two_pi, c, s, static_cast<mpfr_ptr>(nullptr));
    return result;
}

Rational box_frequency(const Rational& alpha, std::uint64_t N, const Box2& box) {
    if (N < 1) throw std::domain_error("box_frequency: N must be >= 1");
    if (box.u_lo > box.u_hi || box.v_lo > box.v_hi)
        throw std::domain_error("box_frequency: malformed box");
    std::uint64_t hits = 0;
    for (const auto& pt : frac_sequence(alpha, N)) {
        if (box.u_lo <= pt.u && pt.u < box.u_hi && box.v_lo <= pt.v && pt.v < box.v_hi)
            ++hits;
    }
    return mk_rational(BigInt(static_cast<unsigned long>(hits)),
                       BigInt(static_cast<unsigned long>(N)));
}

std::pair<Rational, Rational> density_A(const Rational& alpha, const RegionSpec& region,
                                        std::uint64_t N) {
    if (N < 1) throw std::domain_error("density_A: N must be >= 1");
    std::uint64_t hits = 0;
    for (std::uint64_t n = 1; n <= N; ++n)
        if (a_set_member(alpha, region, n)) ++hits;
    const Rational half_gap = (1 - region.t) / 2;
    Rational predicted = half_gap * (half_gap - region.a);
    return {mk_rational(BigInt(static_cast<unsigned long>(hits)),
                        BigInt(static_cast<unsigned long>(N))),
            predicted};
}

Rational random_alpha(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::domain_error("random_alpha: need lo < hi");
    // Denominator uniform in [2^63, 2^64); numerator uniform over the
    // integers p with lo < p/q < hi.
    for (;;) {
        const std::uint64_t q64 = (std::uint64_t(1) << 63) | rng();
        BigInt q(static_cast<unsigned long>(q64));
        BigInt pmin = floor_div(num(lo) * q, den(lo)) + 1;
        BigInt pmax = ceil_div(num(hi) * q, den(hi)) - 1;
        if (pmax < pmin) continue;
        BigInt span = pmax - pmin + 1;
        BigInt offset = BigInt(static_cast<unsigned long>(rng())) % span;
        Rational a = mk_rational(pmin + offset, q);
        if (lo < a && a < hi) return a;
    }
}

}  // namespace asq

#include "asq/construct.hpp"

#include <mpfr.h>

namespace asq {

RegionSpec RegionSpec::make(const Rational& s, const Rational& t) {
    if (!(0 < s && s < t && t < 1))
        throw std::domain_error("RegionSpec: need 0 < s < t < 1");
    RegionSpec r;
    r.s = s;
    r.t = t;
    Rational cand = (1 - t) / 2 - s;
    r.a = cand > 0 ? cand : Rational(0);
    return r;
}

namespace {

CandidateTuple make_candidate(const Rational& alpha, std::string family,
                              std::vector<std::pair<std::string, BigInt>> params,
                              std::array<BigInt, 3> idx, bool ceiling) {
    CandidateTuple c;
    c.alpha = alpha;
    c.family = std::move(family);
    c.params = std::move(params);
    c.record = verify_tuple_candidate(alpha, idx, ceiling);
    c.index = c.record.index;
    c.values = c.record.values;
    return c;
}

}  // namespace

CandidateTuple floor_family(const Rational& alpha, std::uint64_t n) {
    if (!(alpha > 0 && alpha < 1))
        throw std::domain_error("floor_family: alpha must lie in (0,1)");
    if (n < 1) throw std::domain_error("floor_family: n must be >= 1");
    const BigInt& q = den(alpha);
    const std::uint64_t r = r_of(q);
    BigInt y = pell(2 * r * n);
    BigInt third = y * y / 2 - 1;  // y is even: P_k is even iff k is even
    return make_candidate(alpha, "floor",
                          {{"p", num(alpha)}, {"q", q}, {"r", BigInt(static_cast<unsigned long>(r))},
                           {"n", BigInt(static_cast<unsigned long>(n))}},
                          {y, y, third}, false);
}

std::int64_t lower_bound_formula(const BigInt& q, const Rational& x) {
    if (q < 1) throw std::domain_error("lower_bound_formula: q must be >= 1");
    if (x <= 1) throw std::domain_error("lower_bound_formula: x must exceed 1");
    const BigInt c4 = 4 * ceil_sqrt2_mul(q);  // 4 ceil(sqrt(2) q), exact
    const Rational x16 = 16 * x;

    // v = log(16x) / (4 c log(1+sqrt(2))) is irrational for rational x, so
    // bracketing with directed rounding terminates.
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        mpfr_t lo, hi, den_lo, den_hi, t;
        mpfr_inits2(prec, lo, hi, den_lo, den_hi, t, static_cast<mpfr_ptr>(nullptr));

        mpfr_set_q(t, x16.get_mpq_t(), MPFR_RNDD);
        mpfr_log(lo, t, MPFR_RNDD);
        mpfr_set_q(t, x16.get_mpq_t(), MPFR_RNDU);
        mpfr_log(hi, t, MPFR_RNDU);

        // den = 4 c log(1+sqrt(2))
        mpfr_sqrt_ui(t, 2, MPFR_RNDD);
        mpfr_add_ui(t, t, 1, MPFR_RNDD);
        mpfr_log(den_lo, t, MPFR_RNDD);
        mpfr_mul_z(den_lo, den_lo, c4.get_mpz_t(), MPFR_RNDD);
        mpfr_sqrt_ui(t, 2, MPFR_RNDU);
        mpfr_add_ui(t, t, 1, MPFR_RNDU);
        mpfr_log(den_hi, t, MPFR_RNDU);
        mpfr_mul_z(den_hi, den_hi, c4.get_mpz_t(), MPFR_RNDU);

        mpfr_div(lo, lo, den_hi, MPFR_RNDD);
        mpfr_div(hi, hi, den_lo, MPFR_RNDU);

        mpfr_floor(t, lo);
        const std::int64_t f_lo = mpfr_get_si(t, MPFR_RNDN);
        mpfr_floor(t, hi);
        const std::int64_t f_hi = mpfr_get_si(t, MPFR_RNDN);
        mpfr_clears(lo, hi, den_lo, den_hi, t, static_cast<mpfr_ptr>(nullptr));
        if (f_lo == f_hi) return f_lo;
    }
}

Rational stability_delta(const Rational& alpha, const BigInt& W) {
    if (alpha <= 0 || W <= 0)
        throw std::domain_error("stability_delta: alpha and W must be positive");
    return (1 - frac_part_mul(alpha, W)) / Rational(W);
}

namespace {

// ({alpha P_{2n}^4/4}, {alpha P_{2n}^2}): P_{2n} is even, so P_{2n}^4/4 is
// the exact integer (P_{2n}^2/2)^2.
std::pair<Rational, Rational> pell_frac_pair(const Rational& alpha, std::uint64_t n) {
    BigInt y = pell(2 * n);
    BigInt y2 = y * y;
    BigInt w = y2 / 2;
    return {frac_part_mul(alpha, w * w), frac_part_mul(alpha, y2)};
}

}  // namespace

bool a_set_member(const Rational& alpha, const RegionSpec& region, std::uint64_t n) {
    if (alpha < region.s || alpha > region.t)
        throw std::domain_error("a_set_member: alpha must lie in [s,t]");
    if (n < 1) throw std::domain_error("a_set_member: n must be >= 1");
    const auto [u, v] = pell_frac_pair(alpha, n);
    const Rational half_gap = (1 - region.t) / 2;
    return region.a <= u && u <= half_gap && 0 <= v && v <= half_gap;
}

CandidateTuple floor_family_A(const Rational& alpha, const RegionSpec& region,
                              std::uint64_t n) {
    if (!a_set_member(alpha, region, n))
        throw std::domain_error("floor_family_A: n is not in the density set A");
    BigInt y = pell(2 * n);
    BigInt third = y * y / 2 - 1;
    return make_candidate(alpha, "floor_a",
                          {{"n", BigInt(static_cast<unsigned long>(n))}},
                          {y, y, third}, false);
}

CandidateTuple ceil_family_odd(std::uint64_t q, const BigInt& p, std::uint64_t n) {
    if (q < 1 || q % 2 == 0) throw std::domain_error("ceil_family_odd: q must be odd and >= 1");
    if (n < 1 || n % 2 == 0) throw std::domain_error("ceil_family_odd: n must be odd and >= 1");
    const BigInt pq = pell(q);
    if (!(p > 0 && 9 * p < 4 * pq))
        throw std::domain_error("ceil_family_odd: need 0 < p < (4/9) P_q");
    const Rational alpha = mk_rational(p, pq);
    BigInt y = pell(q * n - 1);  // qn-1 is even
    BigInt third = y * y / 2 - 1;
    return make_candidate(alpha, "ceil_odd",
                          {{"q", BigInt(static_cast<unsigned long>(q))}, {"p", p},
                           {"n", BigInt(static_cast<unsigned long>(n))}},
                          {y, y, third}, true);
}

namespace {

// delta(x) = {x} for non-integral x, 1 otherwise; then ceil(x) = x + 1 - delta(x).
Rational delta_of(const Rational& x) {
    Rational f = frac_part(x);
    return f == 0 ? Rational(1) : f;
}

bool in_interval_union(const Rational& alpha) {
    auto in = [&](int an, int ad, int bn, int bd) {
        return alpha > mk_rational(an, ad) && alpha <= mk_rational(bn, bd);
    };
    return in(1, 8, 3, 16) || in(1, 3, 3, 8) || in(5, 9, 9, 16);
}

}  // namespace

std::pair<Rational, Rational> delta_conditions(const Rational& alpha) {
    if (!(alpha > 0 && alpha < 1))
        throw std::domain_error("delta_conditions: alpha must lie in (0,1)");
    Rational c1 = 1 - alpha + delta_of(9 * alpha) - 2 * delta_of(4 * alpha);
    Rational c2 = 1 - 3 * alpha + delta_of(16 * alpha) - delta_of(9 * alpha) - delta_of(4 * alpha);
    return {c1, c2};
}

CandidateTuple ceil_family_intervals(const Rational& alpha, std::uint64_t n) {
    const bool in_union = in_interval_union(alpha);
    const auto [c1, c2] = delta_conditions(alpha);
    if (in_union != (c1 == 0 && c2 == 0))
        throw std::logic_error("ceil_family_intervals: interval test disagrees with the "
                               "delta conditions");
    if (!in_union)
        throw std::domain_error("ceil_family_intervals: alpha outside "
                                "(1/8,3/16] u (1/3,3/8] u (5/9,9/16]");
    if (n == 0 || n % 4 != 0) throw std::domain_error("ceil_family_intervals: need 4 | n");
    const std::uint64_t r = r_of(den(alpha));
    BigInt y = pell(r * n - 2);  // rn-2 is even
    BigInt third = y * y / 2;    // note: y^2/2, not y^2/2 - 1
    return make_candidate(alpha, "ceil_intervals",
                          {{"p", num(alpha)}, {"q", den(alpha)},
                           {"r", BigInt(static_cast<unsigned long>(r))},
                           {"n", BigInt(static_cast<unsigned long>(n))}},
                          {y, y, third}, true);
}

bool region_b(const RegionSpec& region, const Rational& u, const Rational& v) {
    const Rational& s = region.s;
    const Rational& t = region.t;
    if (!(u > 0 && u < 1 && v > 0 && v < 1)) return false;
    if (!((1 - s) / 2 < u && u < (2 - t) / 2)) return false;
    if (!(1 - s < u + v && u + v < 2 - t)) return false;
    if (!(t < u - v && u - v < 1 + s)) return false;
    return true;
}

CandidateTuple ceil_family_region(const Rational& alpha, const RegionSpec& region,
                                  std::uint64_t n) {
    if (alpha < region.s || alpha > region.t)
        throw std::domain_error("ceil_family_region: alpha must lie in [s,t]");
    const auto [u4, u2] = pell_frac_pair(alpha, n);
    if (!region_b(region, u2, u4))
        throw std::domain_error("ceil_family_region: fractional parts outside the region");
    BigInt y = pell(2 * n);
    BigInt third = y * y / 2 - 1;
    return make_candidate(alpha, "ceil_region",
                          {{"n", BigInt(static_cast<unsigned long>(n))}},
                          {y, y, third}, true);
}

}  // namespace asq

#pragma once

// Empirical equidistribution laboratory: exact fractional-part pairs
// ({alpha P_{2n}^4/4}, {alpha P_{2n}^2}), Weyl sums at extended precision,
// box frequencies against area, and the predicted density of the
// construction set A.

#include "asq/construct.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace asq {

struct FracPoint2 {
    Rational u;  // {alpha P_{2n}^4 / 4}
    Rational v;  // {alpha P_{2n}^2}
    std::uint64_t n;
};

// Exact points for n = 1..N.
std::vector<FracPoint2> frac_sequence(const Rational& alpha, std::uint64_t N);

// | (1/N) sum_n e(h1 u_n + h2 v_n) |, evaluated at >= 128-bit precision
// from the exact rationals. (h1, h2) = (0, 0) is a domain error.
double weyl_sum(std::int64_t h1, std::int64_t h2, const Rational& alpha, std::uint64_t N);

struct Box2 {
    Rational u_lo, u_hi, v_lo, v_hi;  // [u_lo, u_hi) x [v_lo, v_hi)
};

// Exact fraction of the first N points landing in the half-open box.
Rational box_frequency(const Rational& alpha, std::uint64_t N, const Box2& box);

// (empirical density of a_set_member over n <= N,
//  predicted ((1-t)/2) * ((1-t)/2 - a)).
std::pair<Rational, Rational> density_A(const Rational& alpha, const RegionSpec& region,
                                        std::uint64_t N);

// Random rational in (lo, hi) with a uniform 64-bit denominator; the exact
// fractional parts stay computable at any n, unlike a float sample.
Rational random_alpha(std::mt19937_64& rng, const Rational& lo, const Rational& hi);

}  // namespace asq

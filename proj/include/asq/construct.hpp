#pragma once

// Explicit tuple families built from Pell numbers, each emitted as a
// candidate and pushed through the membership oracle: no construction is
// trusted without machine verification, and the verification record is
// returned alongside the tuple either way.

#include "asq/membership.hpp"
#include "asq/pell.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace asq {

struct CandidateTuple {
    Rational alpha;
    std::string family;  // "floor", "floor_a", "ceil_odd", "ceil_intervals", "ceil_region"
    std::vector<std::pair<std::string, BigInt>> params;  // q, p, r, n as applicable
    std::array<BigInt, 3> index;
    std::array<BigInt, 3> values;
    VerificationRecord record;
};

// Parameter box for the density constructions: 0 < s < t < 1 and
// a = max(0, (1-t)/2 - s).
struct RegionSpec {
    Rational s, t, a;
    static RegionSpec make(const Rational& s, const Rational& t);
};

// Floor family for rational alpha = p/q in (0,1): with r = r(q) and
// y = P_{2rn}, the triple of witnesses (y, y, y^2/2 - 1) verifies for every
// n >= 1; the returned record is the machine check of that guarantee.
CandidateTuple floor_family(const Rational& alpha, std::uint64_t n);

// floor(log(16x) / (4 ceil(sqrt(2) q) log(1+sqrt(2)))), the guaranteed lower
// bound on the number of value triples with witnesses <= x. Evaluated with
// guarded precision: the working precision doubles until the floor is
// bracketed away from an integer boundary.
std::int64_t lower_bound_formula(const BigInt& q, const Rational& x);

// delta(alpha, W) = (1 - {alpha W}) / W: every beta in [alpha, alpha+delta)
// has floor(beta W) = floor(alpha W).
Rational stability_delta(const Rational& alpha, const BigInt& W);

// Membership of n in the density set A: both fractional parts
// ({alpha P_{2n}^4 / 4}, {alpha P_{2n}^2}) land in the closed box
// [a, (1-t)/2] x [0, (1-t)/2]. Requires alpha in [s, t].
bool a_set_member(const Rational& alpha, const RegionSpec& region, std::uint64_t n);

// Floor triple (P_{2n}, P_{2n}, P_{2n}^2/2 - 1); requires a_set_member.
CandidateTuple floor_family_A(const Rational& alpha, const RegionSpec& region, std::uint64_t n);

// Ceiling family at alpha = p / P_q for odd q and odd n, with witnesses
// (P_{qn-1}, P_{qn-1}, P_{qn-1}^2/2 - 1). Requires 0 < p < (4/9) P_q.
// The record is honest: small parameters are known to fail verification.
CandidateTuple ceil_family_odd(std::uint64_t q, const BigInt& p, std::uint64_t n);

// The two exactness conditions behind the interval family, evaluated
// exactly with delta(x) = {x} for non-integral x and delta(x) = 1 otherwise:
//   1 - alpha + delta(9 alpha) - 2 delta(4 alpha)
//   1 - 3 alpha + delta(16 alpha) - delta(9 alpha) - delta(4 alpha)
std::pair<Rational, Rational> delta_conditions(const Rational& alpha);

// Ceiling family for alpha in (1/8,3/16] u (1/3,3/8] u (5/9,9/16] and 4 | n,
// with witnesses (P_{rn-2}, P_{rn-2}, P_{rn-2}^2/2). Membership in the union
// is cross-checked against delta_conditions == (0, 0).
CandidateTuple ceil_family_intervals(const Rational& alpha, std::uint64_t n);

// Open-region test: (1-s)/2 < u < (2-t)/2, 1-s < u+v < 2-t, t < u-v < 1+s,
// and (u,v) in (0,1)^2, all strict.
bool region_b(const RegionSpec& region, const Rational& u, const Rational& v);

// Ceiling triple (P_{2n}, P_{2n}, P_{2n}^2/2 - 1); requires region_b at
// (u, v) = ({alpha P_{2n}^2}, {alpha P_{2n}^4/4}) and alpha in [s, t].
CandidateTuple ceil_family_region(const Rational& alpha, const RegionSpec& region,
                                  std::uint64_t n);

}  // namespace asq

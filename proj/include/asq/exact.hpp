#pragma once

// Exact arithmetic substrate: arbitrary-precision integers, canonical
// rationals, integer square roots, and exact evaluation of floor/ceil/
// fractional part of alpha*n^2. Everything downstream builds on this.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asq {

using BigInt = mpz_class;

// Canonical fraction: den > 0, gcd(|num|, den) = 1. All constructors used in
// this project go through mk_rational / parse_rational, which canonicalize.
using Rational = mpq_class;

// p/q with q != 0, canonicalized; sign carried by the numerator.
Rational mk_rational(const BigInt& p, const BigInt& q);

// Accepts "p/q", plain integers, and decimal strings ("0.55" -> 11/20).
Rational parse_rational(std::string_view text);

inline const BigInt& num(const Rational& a) { return a.get_num(); }
inline const BigInt& den(const Rational& a) { return a.get_den(); }

std::string to_string(const BigInt& n);
std::string to_string(const Rational& a);

// Floor square root: s with s^2 <= n < (s+1)^2. n < 0 is a domain error.
BigInt isqrt(const BigInt& n);

// Floor division toward -infinity and the matching ceiling division.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

// floor(alpha * n^2), exact. Requires alpha > 0.
BigInt floor_mul_sq(const Rational& alpha, const BigInt& n);

// ceil(alpha * n^2) = -floor(-alpha * n^2), exact. Requires alpha > 0.
BigInt ceil_mul_sq(const Rational& alpha, const BigInt& n);

// Exact fractional part {alpha * N} in [0,1).
Rational frac_part_mul(const Rational& alpha, const BigInt& N);

// Exact fractional part {x} in [0,1) (floor convention, toward -infinity).
Rational frac_part(const Rational& x);

// Smallest n >= 0 with lo <= n^2 <= hi, if any.
std::optional<BigInt> square_in_range(const BigInt& lo, const BigInt& hi);

// Smallest witness admissible for S(alpha): ceil(alpha^{-1/2}), i.e. the
// least n >= 1 with n^2 * num >= den. Requires alpha > 0.
BigInt min_witness_index(const Rational& alpha);

}  // namespace asq

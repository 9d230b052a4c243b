#pragma once

// Test-only reference oracles. They intentionally duplicate logic instead of
// sharing the fast paths they check: the triple enumerators are plain cubic
// loops over the membership oracle, and the set scans mark values by direct
// iteration without any square-root shortcut.

#include "asq/enumerate.hpp"

namespace asq::testing {

// Exhaustive cubic-loop enumerator; x <= 300 cost guard.
EnumReport reference_enum_T(const Rational& alpha, std::uint64_t x);
EnumReport reference_enum_Tbar(const Rational& alpha, std::uint64_t x);

// Direct image scan: marks[v] = true iff v = floor(alpha n^2) (or ceiling)
// for some admissible witness n, for v in [1, limit]. No isqrt involved.
std::vector<bool> linear_scan_set(const Rational& alpha, std::uint64_t limit, bool ceiling);

// Smallest witness per value (0 where absent), same scan.
std::vector<std::uint64_t> linear_scan_witness(const Rational& alpha, std::uint64_t limit,
                                               bool ceiling);

// Brute-force variant-brick search over all pairs, for small x.
std::vector<IndexTriple> brute_enum_V(std::uint64_t x);

}  // namespace asq::testing

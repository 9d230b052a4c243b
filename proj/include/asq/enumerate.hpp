#pragma once

// Exhaustive exact searches. The triple enumerator scans all witness pairs
// (n1, n2) once, keeps the sparse compatibility relation
// E = {(n1,n2) : v(n1)+v(n2) in S(alpha)} as sorted partner lists, and
// finishes triples by list intersection plus one triple-sum membership test.
// Also: the variant-brick search V(x), the shifted-square box sets, divisor
// counting and factorization.

#include "asq/membership.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace asq {

// Thrown when an enumeration would exceed its declared memory budget;
// results are never silently truncated.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexTriple {
    std::uint64_t n1, n2, n3;  // sorted ascending
    friend auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
};

struct ValueTriple {
    BigInt k, l, m;  // sorted ascending
    friend bool operator==(const ValueTriple& a, const ValueTriple& b) {
        return a.k == b.k && a.l == b.l && a.m == b.m;
    }
    friend bool operator<(const ValueTriple& a, const ValueTriple& b) {
        if (a.k != b.k) return a.k < b.k;
        if (a.l != b.l) return a.l < b.l;
        return a.m < b.m;
    }
};

struct EnumOptions {
    int workers = 1;
    // Bit budget for the value-membership cache; larger value ranges fall
    // back to direct oracle calls.
    std::uint64_t cache_bits_limit = MembershipCache::kMaxBits;
    // Hard cap on stored compatible pairs (resource guard).
    std::uint64_t max_edges = std::uint64_t(1) << 28;
};

struct EnumReport {
    Rational alpha;
    std::uint64_t x = 0;
    bool ceiling = false;
    std::vector<IndexTriple> index_triples;  // sorted lexicographically
    std::vector<ValueTriple> value_triples;  // deduplicated, sorted
    // Per value triple: least witness bound x' at which it first appears,
    // i.e. min over its witness triples of max(n1,n2,n3).
    std::vector<std::uint64_t> first_x;
    std::uint64_t pair_tests = 0;
    std::uint64_t edge_count = 0;
    double wall_seconds = 0.0;
    int workers = 1;

    // Step function #T_{<=x'} as (x', count) jump points, ending at (x, total).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> step_points() const;
};

// Complete enumeration of the witness triples n1 <= n2 <= n3 <= x (floor
// mode additionally bounds witnesses below by ceil(alpha^{-1/2})).
EnumReport enum_T(const Rational& alpha, std::uint64_t x, const EnumOptions& opt = {});
EnumReport enum_Tbar(const Rational& alpha, std::uint64_t x, const EnumOptions& opt = {});

// Variant bricks: all (n1 <= n2 <= n3 <= x), each >= 2, with
// n1^2+n2^2-1, n1^2+n3^2-1, n2^2+n3^2-1 and n1^2+n2^2+n3^2-2 all square.
std::vector<IndexTriple> enum_V(std::uint64_t x, const EnumOptions& opt = {});

struct ABoxResult {
    std::uint64_t count = 0;
    std::vector<std::array<std::uint64_t, 3>> tuples;  // ordered (k,l,m)
};

// Tuples (k,l,m) in [1,x]^3 with k^2+l^2 = y^2+a1, k^2+m^2 = z^2+a2,
// m^2+l^2 = w^2+a3 solvable in positive y,z,w. |a_i| <= shift_cap.
ABoxResult enum_A_box(std::uint64_t x, std::int64_t a1, std::int64_t a2, std::int64_t a3,
                      std::int64_t shift_cap = 64);

// Prime factorization, sorted (prime, exponent) pairs. Deterministic for
// 64-bit inputs; certainty-checked probabilistic primality above that.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

// tau_+ counts positive divisors, tau counts positive and negative ones.
BigInt tau_plus(const BigInt& n);
BigInt tau(const BigInt& n);

struct DivisorSumProfile {
    std::vector<std::uint64_t> grid;       // log-spaced checkpoints up to x
    std::vector<BigInt> partial_sums;      // sum_{k<=X} tau(k^2-a1) tau(k^2-a2)
    std::vector<double> ratio_to_bound;    // partial sum / (X (log X)^15)
};

DivisorSumProfile divisor_sum_profile(std::uint64_t x, std::int64_t a1, std::int64_t a2);

}  // namespace asq

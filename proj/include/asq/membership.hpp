#pragma once

// Exact membership oracles for S(alpha) = {floor(alpha n^2) : n >= alpha^{-1/2}}
// and Sbar(alpha) = {ceil(alpha n^2) : n >= 1}, plus the seven-sum tuple
// verifier: (k,l,m) qualifies when k, l, m, k+l, l+m, m+k, k+l+m all belong
// to the set. Each oracle call is O(1) big-integer work via isqrt.

#include "asq/exact.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace asq {

struct MembershipWitness {
    bool member = false;
    std::optional<BigInt> witness;  // smallest witness index when member
};

// m in S(alpha) <=> some n^2 lies in [ceil(q m / p), floor((q(m+1)-1)/p)].
// alpha must be in (0,1] canonical; m <= 0 is rejected loudly.
MembershipWitness in_S(const Rational& alpha, const BigInt& m);

// m in Sbar(alpha) <=> some n^2 lies in [floor(q(m-1)/p)+1, floor(q m / p)].
MembershipWitness in_Sbar(const Rational& alpha, const BigInt& m);

struct SumCheck {
    const char* label;  // "k", "l", "m", "k+l", "l+m", "m+k", "k+l+m"
    BigInt value;
    MembershipWitness membership;
};

struct VerificationRecord {
    Rational alpha;
    bool ceiling = false;
    std::array<BigInt, 3> index;   // sorted ascending
    std::array<BigInt, 3> values;  // (k, l, m), sorted ascending
    std::array<SumCheck, 7> checks;
    bool verified = false;

    std::vector<std::string> failing_sums() const;
};

// Floor-mode verifier. Indices may arrive in any order (the seven-sum
// condition is symmetric); they are sorted internally. Each index must be
// >= alpha^{-1/2}, checked exactly; violations are a domain error.
VerificationRecord verify_T_tuple(const Rational& alpha, std::array<BigInt, 3> idx);

// Ceiling analogue; indices only need to be >= 1.
VerificationRecord verify_Tbar_tuple(const Rational& alpha, std::array<BigInt, 3> idx);

// Generator-facing variant: witnesses below the admissible floor are not an
// error here; the affected checks simply record as misses (value 0 can never
// be a member). Constructions gate on record.verified, not on exceptions.
VerificationRecord verify_tuple_candidate(const Rational& alpha, std::array<BigInt, 3> idx,
                                          bool ceiling);

// Bit-vector image of S(alpha) (or Sbar) on [1, max_value], for enumeration
// workloads that declare their value range up front. Immutable once built.
class MembershipCache {
  public:
    static constexpr std::uint64_t kMaxBits = std::uint64_t(1) << 35;

    MembershipCache(const Rational& alpha, std::uint64_t max_value, bool ceiling);

    bool contains(std::uint64_t m) const {
        return bits_[m >> 6] >> (m & 63) & 1;
    }
    std::uint64_t max_value() const { return max_value_; }

  private:
    std::uint64_t max_value_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace asq

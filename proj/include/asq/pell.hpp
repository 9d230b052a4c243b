#pragma once

// Pell numbers P_0=0, P_1=1, P_{n+1} = 2 P_n + P_{n-1}, their half
// companions G_n = P_{n+1} - P_n (so G_n^2 - 2 P_n^2 = (-1)^n), and the
// least index r(q) >= 2 with q | P_r. Growth bounds elsewhere use
// phi_P = 1 + sqrt(2), the dominant root of x^2 - 2x - 1.

#include "asq/exact.hpp"

#include <cstdint>
#include <mutex>
#include <vector>

namespace asq {

// Memoized Pell values; extension is internally synchronized so the shared
// table can be read from parallel workers.
class PellTable {
  public:
    static PellTable& global();

    BigInt pell(std::uint64_t n) const;
    BigInt half_companion(std::uint64_t n) const;  // G_n = P_{n+1} - P_n

  private:
    PellTable() : values_{BigInt(0), BigInt(1)} {}
    void ensure(std::uint64_t n) const;

    mutable std::mutex mu_;
    mutable std::vector<BigInt> values_;
};

BigInt pell(std::uint64_t n);
BigInt half_companion(std::uint64_t n);

// P_{m+1} P_n + P_m P_{n-1}; equals P_{m+n} for n >= 1.
BigInt addition_law(std::uint64_t m, std::uint64_t n);

// Smallest r >= 2 with q | P_r, found by running the recurrence mod q.
// Guaranteed (and asserted) to satisfy r <= ceil(sqrt(2) q). Requires q >= 1.
std::uint64_t r_of(const BigInt& q);

// ceil(sqrt(2) * q) computed exactly (sqrt(2) q is never an integer).
BigInt ceil_sqrt2_mul(const BigInt& q);

}  // namespace asq

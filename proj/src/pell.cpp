#include "asq/pell.hpp"

namespace asq {

PellTable& PellTable::global() {
    static PellTable table;
    return table;
}

void PellTable::ensure(std::uint64_t n) const {
    if (n < values_.size()) return;
    values_.reserve(n + 1);
    while (values_.size() <= n) {
        const std::size_t k = values_.size();
        values_.push_back(2 * values_[k - 1] + values_[k - 2]);
    }
}

BigInt PellTable::pell(std::uint64_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(n);
    return values_[n];
}

BigInt PellTable::half_companion(std::uint64_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(n + 1);
    return values_[n + 1] - values_[n];
}

BigInt pell(std::uint64_t n) { return PellTable::global().pell(n); }

BigInt half_companion(std::uint64_t n) { return PellTable::global().half_companion(n); }

BigInt addition_law(std::uint64_t m, std::uint64_t n) {
    if (n < 1) throw std::domain_error("addition_law: n must be >= 1");
    auto& t = PellTable::global();
    return t.pell(m + 1) * t.pell(n) + t.pell(m) * t.pell(n - 1);
}

BigInt ceil_sqrt2_mul(const BigInt& q) {
    // floor(sqrt(2) q) = isqrt(2 q^2); sqrt(2) q is irrational for q >= 1.
    return isqrt(2 * q * q) + 1;
}

std::uint64_t r_of(const BigInt& q) {
    if (q < 1) throw std::domain_error("r_of: q must be >= 1");
    const BigInt bound = ceil_sqrt2_mul(q);
    BigInt prev = 0, cur = 1;  // P_r mod q, starting at r = 0, 1
    std::uint64_t r = 1;
    for (;;) {
        BigInt next = (2 * cur + prev) % q;
        prev = cur;
        cur = next;
        ++r;
        if (cur == 0 && r >= 2) break;
    }
    if (BigInt(static_cast<unsigned long>(r)) > bound)
        throw std::logic_error("r_of: divisibility index exceeded the ceil(sqrt(2) q) bound");
    return r;
}

}  // namespace asq

#include "asq/membership.hpp"

#include <algorithm>

namespace asq {

namespace {

void check_alpha_unit(const Rational& alpha, const char* who) {
    if (alpha <= 0 || alpha > 1)
        throw std::domain_error(std::string(who) + ": alpha must lie in (0,1]");
}

MembershipWitness witness_from_range(const BigInt& lo, const BigInt& hi) {
    MembershipWitness w;
    if (auto n = square_in_range(lo, hi)) {
        w.member = true;
        w.witness = std::move(*n);
    }
    return w;
}

}  // namespace

MembershipWitness in_S(const Rational& alpha, const BigInt& m) {
    check_alpha_unit(alpha, "in_S");
    if (m <= 0) throw std::domain_error("in_S: membership is defined for m >= 1");
    const BigInt& p = num(alpha);
    const BigInt& q = den(alpha);
    // For m >= 1 the witness constraint n >= alpha^{-1/2} is automatic.
    return witness_from_range(ceil_div(q * m, p), floor_div(q * (m + 1) - 1, p));
}

MembershipWitness in_Sbar(const Rational& alpha, const BigInt& m) {
    check_alpha_unit(alpha, "in_Sbar");
    if (m <= 0) throw std::domain_error("in_Sbar: membership is defined for m >= 1");
    const BigInt& p = num(alpha);
    const BigInt& q = den(alpha);
    return witness_from_range(floor_div(q * (m - 1), p) + 1, floor_div(q * m, p));
}

std::vector<std::string> VerificationRecord::failing_sums() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.membership.member) out.emplace_back(c.label);
    return out;
}

namespace {

VerificationRecord verify_tuple_impl(const Rational& alpha, std::array<BigInt, 3> idx,
                                     bool ceiling, bool strict) {
    check_alpha_unit(alpha, ceiling ? "verify_Tbar_tuple" : "verify_T_tuple");
    std::sort(idx.begin(), idx.end());
    if (idx[0] < 1)
        throw std::domain_error("verify_tuple: witnesses must be >= 1");
    if (strict && !ceiling) {
        const BigInt& p = num(alpha);
        const BigInt& q = den(alpha);
        if (idx[0] * idx[0] * p < q)
            throw std::domain_error("verify_T_tuple: witness below alpha^{-1/2}");
    }

    VerificationRecord rec;
    rec.alpha = alpha;
    rec.ceiling = ceiling;
    rec.index = idx;
    for (int i = 0; i < 3; ++i)
        rec.values[i] = ceiling ? ceil_mul_sq(alpha, idx[i]) : floor_mul_sq(alpha, idx[i]);

    const BigInt& k = rec.values[0];
    const BigInt& l = rec.values[1];
    const BigInt& m = rec.values[2];
    const std::array<std::pair<const char*, BigInt>, 7> sums = {{
        {"k", k},
        {"l", l},
        {"m", m},
        {"k+l", k + l},
        {"l+m", l + m},
        {"m+k", m + k},
        {"k+l+m", k + l + m},
    }};

    rec.verified = true;
    for (int i = 0; i < 7; ++i) {
        const auto& [label, value] = sums[i];
        MembershipWitness w;
        if (value >= 1) w = ceiling ? in_Sbar(alpha, value) : in_S(alpha, value);
        // value <= 0 cannot belong to the set as used: recorded as a miss.
        rec.checks[i] = SumCheck{label, value, std::move(w)};
        rec.verified = rec.verified && rec.checks[i].membership.member;
    }
    return rec;
}

}  // namespace

VerificationRecord verify_T_tuple(const Rational& alpha, std::array<BigInt, 3> idx) {
    return verify_tuple_impl(alpha, std::move(idx), false, true);
}

VerificationRecord verify_Tbar_tuple(const Rational& alpha, std::array<BigInt, 3> idx) {
    return verify_tuple_impl(alpha, std::move(idx), true, true);
}

VerificationRecord verify_tuple_candidate(const Rational& alpha, std::array<BigInt, 3> idx,
                                          bool ceiling) {
    return verify_tuple_impl(alpha, std::move(idx), ceiling, false);
}

MembershipCache::MembershipCache(const Rational& alpha, std::uint64_t max_value, bool ceiling)
    : max_value_(max_value) {
    check_alpha_unit(alpha, "MembershipCache");
    if (max_value + 1 > kMaxBits)
        throw std::length_error("MembershipCache: requested range exceeds the 2^35-bit guard");
    bits_.assign((max_value >> 6) + 1, 0);
    BigInt n = ceiling ? BigInt(1) : min_witness_index(alpha);
    for (;;) {
        BigInt v = ceiling ? ceil_mul_sq(alpha, n) : floor_mul_sq(alpha, n);
        if (v > static_cast<unsigned long>(max_value)) break;
        if (v >= 1) {
            const std::uint64_t m = v.get_ui();
            bits_[m >> 6] |= std::uint64_t(1) << (m & 63);
        }
        n += 1;
    }
}

}  // namespace asq

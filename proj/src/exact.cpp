#include "asq/exact.hpp"

#include <cctype>

namespace asq {

Rational mk_rational(const BigInt& p, const BigInt& q) {
    if (q == 0) throw std::domain_error("mk_rational: zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&]() -> std::domain_error {
        return std::domain_error("parse_rational: cannot parse '" + s + "'");
    };
    if (s.empty()) throw bad();
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
        if (ps.empty() || qs.empty()) throw bad();
        BigInt p, q;
        if (p.set_str(ps, 10) != 0 || q.set_str(qs, 10) != 0) throw bad();
        return mk_rational(p, q);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        // Decimal string: "0.55" means exactly 55/100.
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || frac_len == 0) throw bad();
        BigInt p;
        if (p.set_str(digits, 10) != 0) throw bad();
        BigInt q = 1;
        for (size_t i = 0; i < frac_len; ++i) q *= 10;
        return mk_rational(p, q);
    }
    BigInt p;
    if (p.set_str(s, 10) != 0) throw bad();
    return mk_rational(p, 1);
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const Rational& a) {
    if (den(a) == 1) return num(a).get_str();
    return num(a).get_str() + "/" + den(a).get_str();
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt floor_mul_sq(const Rational& alpha, const BigInt& n) {
    if (alpha <= 0) throw std::domain_error("floor_mul_sq: alpha must be positive");
    return floor_div(num(alpha) * n * n, den(alpha));
}

BigInt ceil_mul_sq(const Rational& alpha, const BigInt& n) {
    if (alpha <= 0) throw std::domain_error("ceil_mul_sq: alpha must be positive");
    return ceil_div(num(alpha) * n * n, den(alpha));
}

Rational frac_part_mul(const Rational& alpha, const BigInt& N) {
    BigInt r;
    BigInt pn = num(alpha) * N;
    mpz_fdiv_r(r.get_mpz_t(), pn.get_mpz_t(), den(alpha).get_mpz_t());
    return mk_rational(r, den(alpha));
}

Rational frac_part(const Rational& x) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), num(x).get_mpz_t(), den(x).get_mpz_t());
    return mk_rational(r, den(x));
}

std::optional<BigInt> square_in_range(const BigInt& lo, const BigInt& hi) {
    if (lo > hi) return std::nullopt;
    if (hi < 0) return std::nullopt;
    BigInt n = 0;
    if (lo > 0) {
        n = isqrt(lo);
        if (n * n < lo) n += 1;  // smallest n with n^2 >= lo
    }
    if (n * n > hi) return std::nullopt;
    return n;
}

BigInt min_witness_index(const Rational& alpha) {
    if (alpha <= 0) throw std::domain_error("min_witness_index: alpha must be positive");
    const BigInt& p = num(alpha);
    const BigInt& q = den(alpha);
    BigInt n = isqrt(ceil_div(q, p));
    while (n * n * p < q) n += 1;
    while (n > 1 && (n - 1) * (n - 1) * p >= q) n -= 1;
    return n;
}

}  // namespace asq

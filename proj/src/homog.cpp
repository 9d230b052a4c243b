#include "asq/homog.hpp"

#include <algorithm>

namespace asq {

BigInt apply_bracket(BracketKind kind, const Rational& x) {
    switch (kind) {
        case BracketKind::Floor:
            return floor_div(num(x), den(x));
        case BracketKind::Ceiling:
            return ceil_div(num(x), den(x));
        case BracketKind::Nearest:
            // floor(x + 1/2): ties round up
            return floor_div(2 * num(x) + den(x), 2 * den(x));
    }
    throw std::logic_error("apply_bracket: bad kind");
}

Rational eta(BracketKind kind, const Rational& x) {
    Rational d = x - Rational(apply_bracket(kind, x));
    return d < 0 ? Rational(-d) : d;
}

HomPoly HomPoly::make(unsigned arity, std::vector<Term> terms) {
    if (terms.empty()) throw std::domain_error("HomPoly: no terms");
    HomPoly f;
    f.arity = arity;
    bool nonzero = false;
    std::optional<unsigned> degree;
    for (auto& t : terms) {
        if (t.exponents.size() != arity)
            throw std::domain_error("HomPoly: exponent vector length != arity");
        unsigned d = 0;
        for (unsigned e : t.exponents) d += e;
        if (degree && *degree != d)
            throw std::domain_error("HomPoly: inhomogeneous terms");
        degree = d;
        nonzero = nonzero || t.coefficient != 0;
    }
    if (!nonzero) throw std::domain_error("HomPoly: zero polynomial");
    f.degree = *degree;
    f.terms = std::move(terms);
    return f;
}

BigInt HomPoly::eval(std::span<const BigInt> point) const {
    if (point.size() != arity) throw std::domain_error("HomPoly::eval: arity mismatch");
    BigInt acc = 0;
    for (const auto& t : terms) {
        BigInt mono = 1;
        for (unsigned i = 0; i < arity; ++i)
            for (unsigned e = 0; e < t.exponents[i]; ++e) mono *= point[i];
        acc += t.coefficient * mono;
    }
    return acc;
}

BigInt bracket_poly_eval(const HomPoly& f, const Rational& alpha, std::span<const BigInt> point,
                         BracketKind kind) {
    if (point.size() != f.arity)
        throw std::domain_error("bracket_poly_eval: arity mismatch");
    BigInt acc = 0;
    for (const auto& t : f.terms) {
        BigInt mono = 1;
        for (unsigned i = 0; i < f.arity; ++i)
            for (unsigned e = 0; e < t.exponents[i]; ++e) mono *= point[i];
        acc += t.coefficient * apply_bracket(kind, alpha * Rational(mono));
    }
    return acc;
}

MultiplierScan scan_multipliers(std::span<const HomPoly> F, std::span<const BigInt> witness,
                                const Rational& alpha, std::uint64_t N, BracketKind kind) {
    if (F.empty()) throw std::domain_error("scan_multipliers: empty system");
    std::vector<BigInt> w(witness.begin(), witness.end());
    for (std::size_t j = 0; j < F.size(); ++j) {
        if (F[j].eval(w) != 0)
            throw std::domain_error("scan_multipliers: witness does not solve f_" +
                                    std::to_string(j + 1) + " exactly");
    }
    MultiplierScan out;
    std::vector<BigInt> scaled(w.size());
    for (std::uint64_t n = 1; n <= N; ++n) {
        for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = w[i] * static_cast<unsigned long>(n);
        bool ok = true;
        for (const auto& f : F) {
            if (bracket_poly_eval(f, alpha, scaled, kind) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.qualifying.push_back(n);
    }
    out.density = N == 0 ? 0.0 : static_cast<double>(out.qualifying.size()) / static_cast<double>(N);
    return out;
}

namespace {

HomPoly::Term sq_term(unsigned arity, int coeff, unsigned var) {
    HomPoly::Term t;
    t.coefficient = coeff;
    t.exponents.assign(arity, 0);
    t.exponents[var] = 2;
    return t;
}

}  // namespace

std::vector<HomPoly> euler_brick_system() {
    // variables: (k, l, m, a, b, c)
    return {
        HomPoly::make(6, {sq_term(6, 1, 0), sq_term(6, 1, 1), sq_term(6, -1, 3)}),
        HomPoly::make(6, {sq_term(6, 1, 0), sq_term(6, 1, 2), sq_term(6, -1, 4)}),
        HomPoly::make(6, {sq_term(6, 1, 1), sq_term(6, 1, 2), sq_term(6, -1, 5)}),
    };
}

HomPoly pythagorean_poly() {
    return HomPoly::make(3, {sq_term(3, 1, 0), sq_term(3, 1, 1), sq_term(3, -1, 2)});
}

std::vector<BridgeEmit> T_alpha_bridge(std::span<const BigInt> witness, const Rational& alpha,
                                       std::uint64_t N) {
    if (witness.size() != 6 && witness.size() != 7)
        throw std::domain_error("T_alpha_bridge: witness must have 6 or 7 components");
    const bool full = witness.size() == 7;
    const BigInt &k = witness[0], &l = witness[1], &m = witness[2];
    const BigInt &a = witness[3], &b = witness[4], &c = witness[5];
    for (const BigInt& w : witness)
        if (w < 1) throw std::domain_error("T_alpha_bridge: witness components must be positive");

    struct Identity {
        const char* name;
        BigInt lhs, rhs;
    };
    // Same pairing convention as euler_brick_system: a with (k,l), b with
    // (k,m), c with (l,m).
    std::vector<Identity> ids = {
        {"k^2+l^2=a^2", k * k + l * l, a * a},
        {"k^2+m^2=b^2", k * k + m * m, b * b},
        {"l^2+m^2=c^2", l * l + m * m, c * c},
    };
    if (full) {
        const BigInt& d = witness[6];
        ids.push_back({"k^2+l^2+m^2=d^2", k * k + l * l + m * m, d * d});
    }
    for (const auto& id : ids)
        if (id.lhs != id.rhs)
            throw std::domain_error(std::string("T_alpha_bridge: certificate identity failed: ") +
                                    id.name);

    std::vector<BridgeEmit> out;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const BigInt nn = BigInt(static_cast<unsigned long>(n));
        auto fl = [&](const BigInt& v) { return floor_mul_sq(alpha, nn * v); };
        const BigInt fk = fl(k), flv = fl(l), fm = fl(m);
        if (fk < 1 || flv < 1 || fm < 1) continue;
        bool ok = fk + flv == fl(a) && fk + fm == fl(b) && flv + fm == fl(c);
        if (ok && full) ok = fk + flv + fm == fl(witness[6]);
        if (!ok) continue;
        BridgeEmit e;
        e.n = n;
        e.record = verify_tuple_candidate(alpha, {nn * k, nn * l, nn * m}, false);
        e.index = e.record.index;
        e.values = e.record.values;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace asq

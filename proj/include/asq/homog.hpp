#pragma once

// Generalized bracket functions (floor, ceiling, nearest), homogeneous
// integer polynomials, the termwise bracket operator [[alpha f]], and the
// multiplier scan that stretches one exact solution of f_j = 0 into a family
// of bracket solutions along n, 2n, 3n, ...

#include "asq/membership.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace asq {

enum class BracketKind { Floor, Ceiling, Nearest };

// The integer [[x]] for the chosen bracket; nearest ties round half up.
BigInt apply_bracket(BracketKind kind, const Rational& x);

// eta(x) = |x - [[x]]|, exact.
Rational eta(BracketKind kind, const Rational& x);

struct HomPoly {
    struct Term {
        BigInt coefficient;
        std::vector<unsigned> exponents;  // length = arity, sum = degree
    };
    unsigned arity = 0;
    unsigned degree = 0;
    std::vector<Term> terms;

    // Validates homogeneity and at least one nonzero coefficient.
    static HomPoly make(unsigned arity, std::vector<Term> terms);

    // Exact value at an integer point.
    BigInt eval(std::span<const BigInt> point) const;
};

// [[alpha f]](x) = sum_t a_t [[alpha x_1^{v1} ... x_r^{vr}]], exact.
BigInt bracket_poly_eval(const HomPoly& f, const Rational& alpha, std::span<const BigInt> point,
                         BracketKind kind);

struct MultiplierScan {
    std::vector<std::uint64_t> qualifying;  // n <= N with all [[alpha f_j]](n x) = 0
    double density = 0.0;
};

// Requires f_j(witness) = 0 exactly for every j (the hypothesis is checked;
// the failing j is reported otherwise).
MultiplierScan scan_multipliers(std::span<const HomPoly> F, std::span<const BigInt> witness,
                                const Rational& alpha, std::uint64_t N, BracketKind kind);

// The three-equation face-diagonal system on (k, l, m, a, b, c):
// k^2+l^2-a^2, k^2+m^2-b^2, l^2+m^2-c^2.
std::vector<HomPoly> euler_brick_system();

// Pythagorean x1^2 + x2^2 - x3^2.
HomPoly pythagorean_poly();

struct BridgeEmit {
    std::uint64_t n = 0;
    std::array<BigInt, 3> index;
    std::array<BigInt, 3> values;
    VerificationRecord record;
};

// Executable reduction from a perfect-brick certificate to T(alpha) members.
// witness has 7 components (k,l,m,a,b,c,d) for the full certificate
// (k^2+l^2=a^2, k^2+m^2=b^2, l^2+m^2=c^2, k^2+l^2+m^2=d^2) or 6 components
// (k,l,m,a,b,c) for the face-diagonal sub-system. A failing identity is a
// domain error naming the identity. For each qualifying n <= N (all bracket
// equations hold and the values are positive) the floor triple is emitted
// with its oracle record; in sub-system mode only the pair-level checks are
// certified, so record.verified reports the triple-sum honestly.
std::vector<BridgeEmit> T_alpha_bridge(std::span<const BigInt> witness, const Rational& alpha,
                                       std::uint64_t N);

}  // namespace asq

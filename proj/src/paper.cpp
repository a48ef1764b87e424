#include "ogs/paper.hpp"

#include "ogs/errors.hpp"

namespace ogs {

namespace {

void require_odd_prime(std::uint64_t p) {
    if (!is_odd_prime(p))
        throw NotOddPrime("p must be an odd prime, got " + std::to_string(p));
}

Int pow_int(std::uint64_t base, std::uint64_t exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

}  // namespace

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

Int PredictedSpectrum::closed_multiplicity() const {
    Int total = 0;
    for (const auto& [v, m] : closed) total += m;
    return total;
}

PredictedSpectrum thm31_prediction(std::uint64_t p, const Rational& alpha) {
    require_odd_prime(p);
    Rational P(static_cast<unsigned long>(p));
    Rational a = alpha, b = Rational(1) - alpha;
    Rational p2 = P * P;
    Int Pi(static_cast<unsigned long>(p));
    Int p2i = Pi * Pi;

    PredictedSpectrum ps;
    ps.claim_id = "thm31";
    ps.closed = {
        {(3 * p2 - 2 * P) * a - 1, p2i - 2},
        {4 * p2 * a - 1, 2 * p2i - 2 * Pi - 1},
        {(3 * p2 + 1) * a - 1, p2i + 2 * Pi - 1},
    };
    // Class order as published: {e}, order 2, order 2p, order p.
    Rational s2 = p2 + 2 * P, s2p = 2 * p2 - 2 * P, sp = p2 - 1;
    ps.residual_quotient = {
        {(4 * p2 - 1) * a, s2 * b, s2p * b, sp * b},
        {b, (s2 - 1) * b + 3 * p2 * a, s2p * b, Rational(0)},
        {b, s2 * b, (s2p - 1) * b + (4 * p2 - 1) * a, sp * b},
        {b, Rational(0), s2p * b, (p2 - 2) + (2 * p2 - 2 * P + 1) * a},
    };
    ps.class_sizes = {Int(1), p2i + 2 * Pi, 2 * p2i - 2 * Pi, p2i - 1};
    return ps;
}

CoefficientClaim cor32_quartic(std::uint64_t p) {
    require_odd_prime(p);
    Rational P(static_cast<unsigned long>(p));
    Rational p2 = P * P, p3 = p2 * P, p4 = p3 * P, p5 = p4 * P, p6 = p5 * P;
    CoefficientClaim c;
    c.claim_id = "cor32";
    c.monic = true;
    c.coefficients = {
        Rational(1),
        4 - 4 * p2,
        p4 + 2 * p3 - 13 * p2 - 2 * P + 6,
        2 * p6 + 2 * p5 - 3 * p4 + 4 * p3 - 11 * p2 - 6 * P + 4,
        2 * p6 + 2 * p5 - 4 * p4 + 2 * p3 - 2 * p2 - 4 * P + 1,
    };
    return c;
}

Spectrum cor33_laplacian(std::uint64_t p) {
    require_odd_prime(p);
    Int P(static_cast<unsigned long>(p));
    Int p2 = P * P;
    Spectrum s;
    auto add = [&s](Int value, Int mult) {
        SpectrumEntry e;
        e.exact = Rational(value);
        e.value = e.exact->get_d();
        e.multiplicity = mult;
        s.entries.push_back(std::move(e));
    };
    add(4 * p2, 2 * p2 - 2 * P + 1);
    add(3 * p2 + 1, p2 + 2 * P - 1);
    add(3 * p2 - 2 * P, p2 - 2);
    add(2 * p2 - 2 * P + 1, Int(1));
    add(Int(0), Int(1));
    return s;
}

PredictedSpectrum cor34_signless(std::uint64_t p) {
    require_odd_prime(p);
    Int P(static_cast<unsigned long>(p));
    Int p2 = P * P;
    PredictedSpectrum ps;
    ps.claim_id = "cor34";
    ps.closed = {
        {Rational(3 * p2 - 2 * P - 2), p2 - 2},
        {Rational(4 * p2 - 2), 2 * p2 - 2 * P - 1},
        {Rational(3 * p2 - 1), p2 + 2 * P - 1},
    };
    // Residual roots are those of the alpha=1/2 quotient, each doubled.
    PredictedSpectrum half = thm31_prediction(p, Rational(1, 2));
    ps.residual_quotient = std::move(half.residual_quotient);
    for (auto& row : ps.residual_quotient)
        for (auto& v : row) v *= 2;
    ps.class_sizes = std::move(half.class_sizes);
    return ps;
}

PredictedSpectrum thm41_prediction(std::uint64_t p, std::uint64_t k,
                                   const Rational& alpha) {
    require_odd_prime(p);
    if (k < 1) throw BadK("k must be >= 1");
    Int pk = pow_int(p, k);
    Rational P(pk);
    Rational a = alpha, b = Rational(1) - alpha;

    PredictedSpectrum ps;
    ps.claim_id = "thm41";
    ps.closed = {
        {(P + 1) * a - 1, pk - 1},
        {P * a - 1, pk - 2},
    };
    // Class order as published: {e}, rotations, reflections.
    ps.residual_quotient = {
        {(2 * P - 1) * a, (P - 1) * b, P * b},
        {b, P + a - 2, Rational(0)},
        {b, Rational(0), P + a - 1},
    };
    ps.class_sizes = {Int(1), pk - 1, pk};
    return ps;
}

CoefficientClaim thm41_cubic(std::uint64_t p, std::uint64_t k,
                             const Rational& alpha) {
    require_odd_prime(p);
    if (k < 1) throw BadK("k must be >= 1");
    Rational P(pow_int(p, k));
    Rational P2 = P * P, P3 = P2 * P;
    Rational a = alpha, a2 = a * a, a3 = a2 * a;

    CoefficientClaim c;
    c.claim_id = "thm41cubic";
    c.monic = false;
    c.coefficients = {
        -2 * P + 1,
        4 * P2 - 8 * P + 3 + (4 * P - 1) * a,
        -2 * P3 + 11 * P2 - 11 * P + 3 + (4 * P2 - 6 * P) * a2 +
            (-12 * P2 + 14 * P - 2) * a,
        -4 * P3 + 10 * P2 - 6 * P + (4 * P - 4 * P2) * a3 +
            (-4 * P3 + 18 * P2 - 12 * P) * a2 +
            (8 * P3 - 23 * P2 + 13 * P - 1) * a + 1,
    };
    return c;
}

}  // namespace ogs

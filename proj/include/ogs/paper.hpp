#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ogs/spectra.hpp"

namespace ogs {

bool is_odd_prime(std::uint64_t p);

/// A closed-form spectrum claim: exact eigenvalue families plus a residual
/// quotient matrix (in the claim's published class order) whose eigenvalues
/// complete the spectrum.
struct PredictedSpectrum {
    std::string claim_id;
    std::vector<std::pair<Rational, Int>> closed;  // (eigenvalue, multiplicity)
    RationalMatrix residual_quotient;
    std::vector<Int> class_sizes;  // cell sizes aligned with quotient rows

    Int closed_multiplicity() const;
};

/// Published polynomial coefficients, highest degree first, recorded verbatim
/// (the leading coefficient may be non-monic).
struct CoefficientClaim {
    std::string claim_id;
    std::vector<Rational> coefficients;
    bool monic = true;
};

/// A_alpha spectrum of the superpower graph of D_p x D_p.
PredictedSpectrum thm31_prediction(std::uint64_t p, const Rational& alpha);

/// Quartic completing the adjacency spectrum of D_p x D_p.
CoefficientClaim cor32_quartic(std::uint64_t p);

/// Full Laplacian spectrum of D_p x D_p, exact.
Spectrum cor33_laplacian(std::uint64_t p);

/// Signless Laplacian spectrum of D_p x D_p; residual quotient is the
/// alpha=1/2 quotient with every entry doubled.
PredictedSpectrum cor34_signless(std::uint64_t p);

/// A_alpha spectrum of the superpower graph of D_{p^k}.
PredictedSpectrum thm41_prediction(std::uint64_t p, std::uint64_t k,
                                   const Rational& alpha);

/// The expanded (non-monic) cubic printed alongside the D_{p^k} quotient.
CoefficientClaim thm41_cubic(std::uint64_t p, std::uint64_t k,
                             const Rational& alpha);

}  // namespace ogs

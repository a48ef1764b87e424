#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ogs/spectra.hpp"
#include "ogs/verify.hpp"

namespace ogs {

/// Spectrum document:
/// {"group": text, "matrix": tag, "alpha": "num/den"|null, "method": tag,
///  "entries": [{"value": number|string, "multiplicity": int}]}
/// Exact rational values are emitted as strings to avoid float corruption.
nlohmann::json spectrum_to_json(const std::string& group_text,
                                const MatrixKind& kind, const std::string& method,
                                const Spectrum& spectrum);

/// Report document:
/// {"checks": [{"name","status","deviation","details"}],
///  "summary": {"pass","fail","finding"}}
nlohmann::json report_to_json(const Report& report);

/// CSV: header "value,multiplicity"; floats at 12 significant digits,
/// exact rationals as terminating decimals when possible, else "num/den".
std::string spectrum_to_csv(const Spectrum& spectrum);

/// Format an exact rational as a decimal string when its expansion
/// terminates (denominator 2^a 5^b), else "num/den".
std::string rational_decimal_or_fraction(const Rational& value);

}  // namespace ogs

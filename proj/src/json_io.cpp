#include "ogs/json_io.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ogs {

namespace {

nlohmann::json kind_tag(const MatrixKind& kind) {
    switch (kind.tag) {
        case MatrixKind::Tag::Adjacency: return "adjacency";
        case MatrixKind::Tag::AAlpha: return "a_alpha";
        case MatrixKind::Tag::Laplacian: return "laplacian";
        case MatrixKind::Tag::SignlessLaplacian: return "signless_laplacian";
    }
    return nullptr;
}

nlohmann::json value_json(const SpectrumEntry& e) {
    if (e.exact) return e.exact->get_str();  // canonical "n" or "n/d"
    return e.value;
}

}  // namespace

nlohmann::json spectrum_to_json(const std::string& group_text,
                                const MatrixKind& kind, const std::string& method,
                                const Spectrum& spectrum) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : spectrum.entries)
        entries.push_back({{"value", value_json(e)},
                           {"multiplicity", e.multiplicity.get_si()}});
    return {{"group", group_text},
            {"matrix", kind_tag(kind)},
            {"alpha", kind.tag == MatrixKind::Tag::AAlpha
                          ? nlohmann::json(kind.alpha.get_str())
                          : nlohmann::json(nullptr)},
            {"method", method},
            {"entries", std::move(entries)}};
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        double dev = std::isfinite(c.max_abs_deviation) ? c.max_abs_deviation : -1.0;
        checks.push_back({{"name", c.name},
                          {"status", to_string(c.status)},
                          {"deviation", dev},
                          {"details", c.details}});
    }
    return {{"checks", std::move(checks)},
            {"summary",
             {{"pass", report.count(CheckStatus::Pass)},
              {"fail", report.count(CheckStatus::Fail)},
              {"finding", report.count(CheckStatus::Finding)}}}};
}

std::string rational_decimal_or_fraction(const Rational& value) {
    Int den = value.get_den();
    Int num = value.get_num();
    // Strip factors of 2 and 5; terminating decimal iff nothing remains.
    Int rest = den;
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) { rest /= 2; ++twos; }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) { rest /= 5; ++fives; }
    if (rest != 1) return value.get_str();

    unsigned long digits = std::max(twos, fives);
    Int scale = 1;
    for (unsigned long i = 0; i < digits; ++i) scale *= 10;
    Int scaled = num * scale / den;  // exact by construction
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.get_str();
    std::string out;
    if (digits == 0) {
        out = s;
    } else {
        while (s.size() <= digits) s.insert(s.begin(), '0');
        out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
        // trim trailing zeros of the fraction part
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
    std::ostringstream os;
    os << "value,multiplicity\n";
    for (const auto& e : spectrum.entries) {
        if (e.exact) {
            os << rational_decimal_or_fraction(*e.exact);
        } else {
            std::ostringstream v;
            v.precision(12);
            v << e.value;
            os << v.str();
        }
        os << "," << e.multiplicity.get_str() << "\n";
    }
    return os.str();
}

}  // namespace ogs

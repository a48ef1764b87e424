#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ogs/errors.hpp"
#include "ogs/graph.hpp"
#include "ogs/group.hpp"
#include "ogs/json_io.hpp"
#include "ogs/parser.hpp"
#include "ogs/paper.hpp"
#include "ogs/spectra.hpp"
#include "ogs/verify.hpp"

namespace {

using namespace ogs;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Best rational approximation with denominator <= max_den, by walking the
// continued-fraction convergents of the exact decimal value.
Rational bounded_rational(const Rational& x, unsigned long max_den) {
    if (x.get_den() <= max_den) return x;
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rational rest = x;
    for (;;) {
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(),
                   rest.get_den().get_mpz_t());
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) {
            // Furthest acceptable semiconvergent.
            Int t = (Int(max_den) - q0) / q1;
            Int ps = t * p1 + p0, qs = t * q1 + q0;
            Rational best(p1, q1);
            Rational semi(ps, qs);
            best.canonicalize();
            semi.canonicalize();
            return abs(x - semi) < abs(x - best) ? semi : best;
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Rational frac = rest - Rational(a);
        if (frac == 0) break;
        rest = Rational(1) / frac;
    }
    Rational r(p1, q1);
    r.canonicalize();
    return r;
}

Rational parse_alpha(const std::string& text) {
    try {
        if (text.find('/') != std::string::npos) {
            Rational r(text);
            r.canonicalize();
            return r;
        }
        // Exact decimal -> rational, then bound the denominator.
        std::size_t dot = text.find('.');
        std::string digits = text;
        unsigned long frac_digits = 0;
        if (dot != std::string::npos) {
            frac_digits = text.size() - dot - 1;
            digits = text.substr(0, dot) + text.substr(dot + 1);
        }
        if (digits.empty()) throw std::invalid_argument("empty");
        Int num(digits, 10);
        Int den = 1;
        for (unsigned long i = 0; i < frac_digits; ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return bounded_rational(r, 1000000);
    } catch (const std::exception&) {
        throw UsageError("cannot parse alpha value '" + text + "'");
    }
}

MatrixKind parse_matrix_kind(const std::string& name,
                             const std::optional<std::string>& alpha_text) {
    if (name == "adjacency") return MatrixKind::adjacency();
    if (name == "laplacian") return MatrixKind::laplacian();
    if (name == "signless" || name == "signless_laplacian")
        return MatrixKind::signless_laplacian();
    if (name == "aalpha" || name == "a_alpha") {
        if (!alpha_text) throw UsageError("--matrix aalpha requires --alpha");
        Rational a = parse_alpha(*alpha_text);
        if (a < 0 || a > 1) throw UsageError("alpha must lie in [0,1]");
        return MatrixKind::a_alpha(a);
    }
    throw UsageError("unknown matrix kind '" + name + "'");
}

double effective_tolerance(const std::optional<double>& flag, double fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv("OGS_TOLERANCE")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw UsageError("OGS_TOLERANCE is not a valid decimal");
        }
    }
    return fallback;
}

void write_output(const std::string& text, const std::optional<std::string>& out,
                  const std::string& summary_line) {
    if (out) {
        std::ofstream f(*out);
        if (!f) throw std::runtime_error("cannot open output file " + *out);
        f << text;
        std::cout << summary_line << "\n";
    } else {
        std::cout << text;
    }
}

std::string poly_to_string(const RationalPoly& poly) {
    std::string out;
    std::size_t deg = poly.degree();
    bool first = true;
    for (std::size_t i = 0; i <= deg; ++i) {
        std::size_t d = deg - i;
        const Rational& c = poly.coeffs[d];
        if (c == 0 && deg > 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string cs = mag.get_den() == 1 ? mag.get_num().get_str()
                                            : "(" + mag.get_str() + ")";
        if (d == 0) {
            out += cs;
        } else {
            if (mag != 1) out += cs;
            out += "λ";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

Spectrum dense_as_spectrum(const OrderClassGraph& cg, const MatrixKind& kind,
                           double merge_tol) {
    auto values = dense_spectrum(build_matrix(expand_dense(cg), kind));
    double radius = 1.0;
    for (double v : values) radius = std::max(radius, std::abs(v));
    return group_eigenvalues(std::move(values), merge_tol * radius);
}

std::string spectrum_table(const Spectrum& s) {
    std::string out = "value  multiplicity\n";
    for (const auto& e : s.entries) {
        if (e.exact) {
            out += rational_decimal_or_fraction(*e.exact);
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.10g", e.value);
            out += buf;
        }
        out += "  " + e.multiplicity.get_str() + "\n";
    }
    return out;
}

int cmd_orders(const std::string& group_text, const std::string& format,
               const std::optional<std::string>& out) {
    auto expr = parse_group_expr(group_text);
    auto profile = order_profile(*expr);
    std::string text;
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [d, c] : profile)
            rows.push_back({{"order", d.get_str()}, {"count", c.get_str()}});
        nlohmann::json doc = {{"group", format_group_expr(*expr)},
                              {"orders", std::move(rows)}};
        text = doc.dump(2) + "\n";
    } else if (format == "csv") {
        text = "order,count\n";
        for (const auto& [d, c] : profile)
            text += d.get_str() + "," + c.get_str() + "\n";
    } else {
        text = "order count\n";
        for (const auto& [d, c] : profile)
            text += d.get_str() + " " + c.get_str() + "\n";
    }
    write_output(text, out,
                 "wrote order profile of " + format_group_expr(*expr));
    return kExitOk;
}

int cmd_spectrum(const std::string& group_text, const MatrixKind& kind,
                 const std::string& method, const std::string& format,
                 const std::optional<std::string>& out, double merge_tol) {
    auto expr = parse_group_expr(group_text);
    auto cg = class_graph(order_profile(*expr));
    std::string canonical = format_group_expr(*expr);

    std::vector<std::pair<std::string, Spectrum>> results;
    if (method == "structural" || method == "both")
        results.emplace_back("structural", structural_spectrum(cg, kind, merge_tol));
    if (method == "dense" || method == "both")
        results.emplace_back("dense", dense_as_spectrum(cg, kind, merge_tol));
    if (results.empty()) throw UsageError("unknown method '" + method + "'");

    std::string text;
    if (format == "json") {
        if (results.size() == 1) {
            text = spectrum_to_json(canonical, kind, results[0].first,
                                    results[0].second)
                       .dump(2) +
                   "\n";
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [m, s] : results)
                arr.push_back(spectrum_to_json(canonical, kind, m, s));
            text = arr.dump(2) + "\n";
        }
    } else if (format == "csv") {
        for (const auto& [m, s] : results) {
            if (results.size() > 1) text += "# method: " + m + "\n";
            text += spectrum_to_csv(s);
        }
    } else {
        for (const auto& [m, s] : results) {
            text += "# " + canonical + " " + kind_name(kind) + " (" + m + ")\n";
            text += spectrum_table(s);
        }
    }
    write_output(text, out, "wrote spectrum of " + canonical);
    return kExitOk;
}

int cmd_charpoly(const std::string& group_text, const MatrixKind& kind,
                 const std::optional<std::string>& out) {
    auto expr = parse_group_expr(group_text);
    auto cg = class_graph(order_profile(*expr));
    auto poly = charpoly_exact(quotient_matrix(cg, kind));
    write_output(poly_to_string(poly) + "\n", out,
                 "wrote quotient characteristic polynomial of " +
                     format_group_expr(*expr));
    return kExitOk;
}

int cmd_verify(const std::optional<std::string>& claim,
               const std::optional<std::string>& group_text, std::uint64_t p,
               std::uint64_t k, const std::optional<std::string>& alpha_text,
               const std::string& format, const std::optional<std::string>& out,
               const std::optional<double>& tol_flag, unsigned jobs) {
    double tol = effective_tolerance(tol_flag, kDefaultCheckTolerance);
    Rational alpha = alpha_text ? parse_alpha(*alpha_text) : Rational(0);

    Report report;
    if (claim) {
        report = check_paper_claim(*claim, p, k, alpha, tol);
    } else if (group_text) {
        CheckSpec spec;
        spec.group = parse_group_expr(*group_text);
        spec.tolerance = tol;
        spec.kinds = {MatrixKind::adjacency(),
                      MatrixKind::a_alpha(alpha_text ? alpha : Rational(1, 2)),
                      MatrixKind::laplacian(), MatrixKind::signless_laplacian()};
        report = cross_check(spec);
    } else {
        auto specs = default_suite();
        for (auto& s : specs) s.tolerance = tol;
        report = run_suite(specs, jobs);
    }

    std::ostringstream human;
    for (const auto& c : report.checks) {
        human << to_string(c.status) << " " << c.name
              << " deviation=" << c.max_abs_deviation;
        if (!c.details.empty()) human << " :: " << c.details;
        human << "\n";
    }
    human << "summary: " << report.count(CheckStatus::Pass) << " pass, "
          << report.count(CheckStatus::Fail) << " fail, "
          << report.count(CheckStatus::Finding) << " finding\n";

    if (format == "json") {
        write_output(report_to_json(report).dump(2) + "\n", out, "wrote report");
        if (out) std::cout << human.str();
    } else {
        std::cout << human.str();
        if (out) {
            std::ofstream f(*out);
            if (!f) throw std::runtime_error("cannot open output file " + *out);
            f << report_to_json(report).dump(2) << "\n";
        }
    }
    return report.all_ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superpower-graph spectra of finite groups"};
    app.require_subcommand(1);

    std::string group_text, matrix_name = "adjacency", method = "both",
                format = "table";
    std::optional<std::string> alpha_text, out_path, claim, verify_group;
    std::optional<double> tol_flag;
    std::uint64_t p = 3, k = 1;
    unsigned jobs = 0;

    auto* orders = app.add_subcommand("orders", "Element-order census");
    orders->add_option("--group", group_text, "group expression")->required();
    orders->add_option("--format", format)
        ->check(CLI::IsMember({"table", "json", "csv"}));
    orders->add_option("--out", out_path, "write structured output here");

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalue spectrum");
    spectrum->add_option("--group", group_text)->required();
    spectrum->add_option("--matrix", matrix_name)
        ->check(CLI::IsMember({"adjacency", "aalpha", "a_alpha", "laplacian",
                               "signless", "signless_laplacian"}));
    spectrum->add_option("--alpha", alpha_text, "rational 'n/d' or decimal");
    spectrum->add_option("--method", method)
        ->check(CLI::IsMember({"structural", "dense", "both"}));
    spectrum->add_option("--format", format)
        ->check(CLI::IsMember({"table", "json", "csv"}));
    spectrum->add_option("--out", out_path);
    spectrum->add_option("--tolerance", tol_flag, "eigenvalue merge tolerance");

    auto* charpoly =
        app.add_subcommand("charpoly", "Exact quotient characteristic polynomial");
    charpoly->add_option("--group", group_text)->required();
    charpoly->add_option("--matrix", matrix_name)
        ->check(CLI::IsMember({"adjacency", "aalpha", "a_alpha", "laplacian",
                               "signless", "signless_laplacian"}));
    charpoly->add_option("--alpha", alpha_text);
    charpoly->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "Cross-validate published claims");
    verify->add_option("--claim", claim,
                       "thm31|cor32|cor33|cor34|thm41|thm41cubic");
    verify->add_option("--group", verify_group, "cross-check one group instead");
    verify->add_option("--p", p);
    verify->add_option("--k", k);
    verify->add_option("--alpha", alpha_text);
    verify->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    verify->add_option("--out", out_path);
    verify->add_option("--tolerance", tol_flag);
    verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (orders->parsed()) return cmd_orders(group_text, format, out_path);
        if (spectrum->parsed()) {
            double merge = effective_tolerance(tol_flag, kDefaultMergeTol);
            return cmd_spectrum(group_text,
                                parse_matrix_kind(matrix_name, alpha_text), method,
                                format, out_path, merge);
        }
        if (charpoly->parsed())
            return cmd_charpoly(group_text,
                                parse_matrix_kind(matrix_name, alpha_text),
                                out_path);
        if (verify->parsed())
            return cmd_verify(claim, verify_group, p, k, alpha_text, format,
                              out_path, tol_flag, jobs);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

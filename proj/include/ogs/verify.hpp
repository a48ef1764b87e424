#pragma once

#include <string>
#include <vector>

#include "ogs/paper.hpp"
#include "ogs/spectra.hpp"

namespace ogs {

enum class CheckStatus { Pass, Fail, Finding };

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    double max_abs_deviation = 0;
    std::string details;
    double wall_ms = 0;
};

struct Report {
    std::vector<CheckResult> checks;

    std::size_t count(CheckStatus s) const;
    bool all_ok() const;  // no Fail entries (Finding allowed)
};

constexpr double kDefaultCheckTolerance = 1e-7;

/// One verification job: either a structural-vs-dense cross-check on a group
/// expression (for each listed matrix kind), or a paper-claim audit.
struct CheckSpec {
    // group cross-check
    GroupExprPtr group;
    std::vector<MatrixKind> kinds;
    // claim audit
    std::string claim_id;
    std::uint64_t p = 0;
    std::uint64_t k = 1;
    Rational alpha;

    double tolerance = kDefaultCheckTolerance;
};

/// Structural vs dense-oracle eigenvalue comparison, plus trace and
/// Laplacian row-sum identities. One result per matrix kind.
Report cross_check(const CheckSpec& spec);

/// Audit one published claim at concrete parameters.
/// claim_id in {thm31, cor32, cor33, cor34, thm41, thm41cubic}.
Report check_paper_claim(const std::string& claim_id, std::uint64_t p,
                         std::uint64_t k, const Rational& alpha,
                         double tolerance = kDefaultCheckTolerance);

/// Run all checks (possibly in parallel) and merge into one report with
/// deterministic ordering. Individual failures never abort the run.
Report run_suite(const std::vector<CheckSpec>& specs, unsigned workers = 0);

/// The standard verification sweep: p in {3,5,7}, alpha in
/// {0, 1/4, 1/2, 3/4, 1}, every claim family, plus group cross-checks.
std::vector<CheckSpec> default_suite();

std::string kind_name(const MatrixKind& kind);

}  // namespace ogs

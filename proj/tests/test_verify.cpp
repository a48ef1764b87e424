#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include <nlohmann/json.hpp>

#include "ogs/errors.hpp"
#include "ogs/json_io.hpp"
#include "ogs/parser.hpp"
#include "ogs/verify.hpp"

using namespace ogs;

namespace {

CheckSpec group_spec(const char* text, std::vector<MatrixKind> kinds) {
    CheckSpec s;
    s.group = parse_group_expr(text);
    s.kinds = std::move(kinds);
    return s;
}

}  // namespace

TEST_CASE("cross_check passes on paper groups") {
    auto r = cross_check(group_spec("D5 x D5", {MatrixKind::adjacency()}));
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].status == CheckStatus::Pass);
    CHECK(r.checks[0].max_abs_deviation < 1e-9);

    auto r2 = cross_check(group_spec(
        "D3 x D3", {MatrixKind::a_alpha(Rational(1, 3)), MatrixKind::laplacian()}));
    REQUIRE(r2.checks.size() == 2);
    for (const auto& c : r2.checks) CHECK(c.status == CheckStatus::Pass);
}

TEST_CASE("cross_check on the trivial group") {
    auto r = cross_check(group_spec(
        "Z1", {MatrixKind::adjacency(), MatrixKind::a_alpha(Rational(1, 2)),
               MatrixKind::laplacian(), MatrixKind::signless_laplacian()}));
    REQUIRE(r.checks.size() == 4);
    for (const auto& c : r.checks) CHECK(c.status == CheckStatus::Pass);
}

TEST_CASE("claim checks") {
    auto c32 = check_paper_claim("cor32", 3, 1, Rational(0));
    REQUIRE(c32.checks.size() == 1);
    CHECK(c32.checks[0].status == CheckStatus::Pass);
    CHECK(c32.checks[0].details.find("-32") != std::string::npos);
    CHECK(c32.checks[0].details.find("1645") != std::string::npos);

    CHECK(check_paper_claim("cor33", 5, 1, Rational(0)).checks[0].status ==
          CheckStatus::Pass);
    CHECK(check_paper_claim("cor34", 5, 1, Rational(0)).checks[0].status ==
          CheckStatus::Pass);
    CHECK(check_paper_claim("thm31", 3, 1, Rational(3, 4)).checks[0].status ==
          CheckStatus::Pass);
    CHECK(check_paper_claim("thm41", 5, 2, Rational(1, 2)).checks[0].status ==
          CheckStatus::Pass);
    CHECK_THROWS_AS(check_paper_claim("thm99", 3, 1, Rational(0)), UnknownClaim);
}

TEST_CASE("thm41 cubic audit: factor at alpha=0, finding otherwise") {
    auto at0 = check_paper_claim("thm41cubic", 3, 1, Rational(0));
    CHECK(at0.checks[0].status == CheckStatus::Pass);
    CHECK(at0.checks[0].details.find("-5") != std::string::npos);

    auto at5 = check_paper_claim("thm41cubic", 5, 1, Rational(0));
    CHECK(at5.checks[0].status == CheckStatus::Pass);
    CHECK(at5.checks[0].details.find("-9") != std::string::npos);  // 1-2*5

    for (auto a : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
        auto r = check_paper_claim("thm41cubic", 3, 1, a);
        CHECK(r.checks[0].status == CheckStatus::Finding);
        CHECK(r.checks[0].details.find("lambda^") != std::string::npos);
    }
}

TEST_CASE("run_suite is deterministic and isolated") {
    std::vector<CheckSpec> specs;
    specs.push_back(group_spec("D3 x D3", {MatrixKind::adjacency()}));
    specs.push_back({.claim_id = "cor32", .p = 3});
    specs.push_back({.claim_id = "thm41cubic", .p = 3, .k = 1, .alpha = Rational(1, 2)});
    // a group beyond the dense cap: must FAIL without harming the others
    CheckSpec big = group_spec("D101 x D101 x Z3", {MatrixKind::adjacency()});
    specs.push_back(big);

    auto r1 = run_suite(specs, 4);
    auto r2 = run_suite(specs, 1);
    REQUIRE(r1.checks.size() == r2.checks.size());
    for (std::size_t i = 0; i < r1.checks.size(); ++i) {
        CHECK(r1.checks[i].name == r2.checks[i].name);
        CHECK(r1.checks[i].status == r2.checks[i].status);
        CHECK(r1.checks[i].details == r2.checks[i].details);
    }
    std::size_t fails = r1.count(CheckStatus::Fail);
    CHECK(fails == 1);
    CHECK(r1.count(CheckStatus::Finding) == 1);
    CHECK(r1.count(CheckStatus::Pass) == 2);
    CHECK_FALSE(r1.all_ok());
    for (const auto& c : r1.checks)
        if (c.status == CheckStatus::Fail)
            CHECK(c.details.find("cap") != std::string::npos);
}

TEST_CASE("empty suite gives empty report") {
    auto r = run_suite({}, 4);
    CHECK(r.checks.empty());
    CHECK(r.all_ok());
}

TEST_CASE("default suite covers every claim at two or more points") {
    auto specs = default_suite();
    CHECK(specs.size() >= 60 / 2);  // expands to >=60 results
    std::map<std::string, int> claim_counts;
    for (const auto& s : specs)
        if (!s.claim_id.empty()) claim_counts[s.claim_id]++;
    for (const char* id : {"thm31", "cor32", "cor33", "cor34", "thm41", "thm41cubic"})
        CHECK(claim_counts[id] >= 2);
}

TEST_CASE("report JSON serialization") {
    auto report = check_paper_claim("cor32", 3, 1, Rational(0));
    auto j = report_to_json(report);
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["checks"][0]["status"] == "PASS");
    // round-trips through text
    auto parsed = nlohmann::json::parse(j.dump());
    CHECK(parsed == j);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "ogs/errors.hpp"
#include "ogs/parser.hpp"

using namespace ogs;

namespace {

// Random AST with parser-visible shape (depth <= 5, n <= 1e6).
GroupExprPtr random_ast(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 2 : 1);
    std::uniform_int_distribution<std::uint64_t> cyc(1, 1000000);
    std::uniform_int_distribution<std::uint64_t> dih(3, 1000000);
    switch (pick(rng)) {
        case 0: return GroupExpr::cyclic(cyc(rng));
        case 1: return GroupExpr::dihedral(dih(rng));
        default:
            return GroupExpr::product(random_ast(rng, depth - 1),
                                      random_ast(rng, depth - 1));
    }
}

}  // namespace

TEST_CASE("atoms and case-insensitivity") {
    CHECK(*parse_group_expr("z12") == *GroupExpr::cyclic(12));
    CHECK(*parse_group_expr("C12") == *GroupExpr::cyclic(12));
    CHECK(*parse_group_expr("d7") == *GroupExpr::dihedral(7));
    CHECK(*parse_group_expr("D5 x D5") ==
          *GroupExpr::product(GroupExpr::dihedral(5), GroupExpr::dihedral(5)));
}

TEST_CASE("grouping and left associativity") {
    auto expected = GroupExpr::product(
        GroupExpr::product(GroupExpr::dihedral(3), GroupExpr::cyclic(4)),
        GroupExpr::dihedral(7));
    CHECK(*parse_group_expr("(D3 x Z4) x D7") == *expected);
    CHECK(*parse_group_expr("D3 x Z4 x D7") == *expected);
    auto right = GroupExpr::product(
        GroupExpr::dihedral(3),
        GroupExpr::product(GroupExpr::cyclic(4), GroupExpr::dihedral(7)));
    CHECK(*parse_group_expr("D3 x (Z4 x D7)") == *right);
}

TEST_CASE("unicode separator") {
    CHECK(*parse_group_expr("D5 \xC3\x97 D5") ==
          *GroupExpr::product(GroupExpr::dihedral(5), GroupExpr::dihedral(5)));
}

TEST_CASE("domain errors carry offsets") {
    CHECK_THROWS_AS(parse_group_expr("D2"), DomainError);
    CHECK_THROWS_AS(parse_group_expr("Z0"), DomainError);
    try {
        parse_group_expr("D3 x D2");
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.offset == 5);
    }
}

TEST_CASE("syntax errors are structured") {
    CHECK_THROWS_AS(parse_group_expr(""), SyntaxError);
    CHECK_THROWS_AS(parse_group_expr("D"), SyntaxError);
    CHECK_THROWS_AS(parse_group_expr("D3 x"), SyntaxError);
    CHECK_THROWS_AS(parse_group_expr("(D3"), SyntaxError);
    CHECK_THROWS_AS(parse_group_expr("D3)"), SyntaxError);
    CHECK_THROWS_AS(parse_group_expr("Q8"), SyntaxError);
    CHECK_THROWS_AS(parse_group_expr("D3 D4"), SyntaxError);
    try {
        parse_group_expr("D3 x Q8");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 5);
    }
}

TEST_CASE("parsing arbitrary bytes never crashes") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> len(0, 24);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s;
        int n = len(rng);
        for (int i = 0; i < n; ++i) s.push_back(static_cast<char>(byte(rng)));
        try {
            parse_group_expr(s);
        } catch (const SyntaxError&) {
        } catch (const DomainError&) {
        }
    }
}

TEST_CASE("canonical formatting") {
    CHECK(format_group_expr(*GroupExpr::cyclic(12)) == "Z12");
    CHECK(format_group_expr(*GroupExpr::product(GroupExpr::dihedral(5),
                                                GroupExpr::dihedral(5))) ==
          "D5 x D5");
    CHECK(format_group_expr(*GroupExpr::product(
              GroupExpr::product(GroupExpr::dihedral(3), GroupExpr::cyclic(4)),
              GroupExpr::dihedral(7))) == "(D3 x Z4) x D7");
}

TEST_CASE("round trip on 500 random ASTs") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        auto ast = random_ast(rng, 5);
        auto text = format_group_expr(*ast);
        CAPTURE(text);
        CHECK(*parse_group_expr(text) == *ast);
    }
}

TEST_CASE("whitespace insensitivity") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        auto ast = random_ast(rng, 3);
        auto text = format_group_expr(*ast);
        // Inflate every gap and add padding.
        std::string spaced = "  ";
        for (char c : text) {
            spaced.push_back(c);
            if (c == 'x' || c == '(' || c == ')') spaced += "   ";
        }
        spaced += "\t ";
        CHECK(*parse_group_expr(spaced) == *ast);
    }
}

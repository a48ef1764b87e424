#pragma once

#include <string>
#include <string_view>

#include "ogs/group.hpp"

namespace ogs {

/// Grammar:
///   expr := term (sep term)*
///   term := atom | '(' expr ')'
///   atom := ('D'|'d') uint | ('Z'|'z'|'C'|'c') uint
///   sep  := 'x' | 'X' | U+00D7
/// Whitespace-insensitive between tokens; products fold left-associatively.
/// Throws SyntaxError (byte offset + expected token) or DomainError.
GroupExprPtr parse_group_expr(std::string_view text);

/// Canonical form: 'D'/'Z' uppercase, " x " separators, parentheses around
/// product subterms. parse(format(e)) == e.
std::string format_group_expr(const GroupExpr& expr);

}  // namespace ogs

#include "ogs/parser.hpp"

#include <cctype>
#include <limits>

#include "ogs/errors.hpp"

namespace ogs {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    GroupExprPtr parse() {
        auto e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "'x' or end of input");
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat_sep() {
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
            ++pos_;
            return true;
        }
        // U+00D7 multiplication sign, UTF-8 0xC3 0x97
        if (pos_ + 1 < text_.size() &&
            static_cast<unsigned char>(text_[pos_]) == 0xC3 &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x97) {
            pos_ += 2;
            return true;
        }
        return false;
    }

    GroupExprPtr expr() {
        auto e = term();
        while (eat_sep()) e = GroupExpr::product(e, term());
        return e;
    }

    GroupExprPtr term() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "'D', 'Z', 'C' or '('");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw SyntaxError(pos_, "')'");
            ++pos_;
            return e;
        }
        return atom();
    }

    GroupExprPtr atom() {
        std::size_t start = pos_;
        char c = text_[pos_];
        bool dihedral;
        if (c == 'D' || c == 'd') dihedral = true;
        else if (c == 'Z' || c == 'z' || c == 'C' || c == 'c') dihedral = false;
        else throw SyntaxError(pos_, "'D', 'Z', 'C' or '('");
        ++pos_;
        std::uint64_t n = integer();
        try {
            return dihedral ? GroupExpr::dihedral(n) : GroupExpr::cyclic(n);
        } catch (const DomainError& e) {
            throw DomainError(std::string(e.what()) + " (at offset " +
                                  std::to_string(start) + ")",
                              start);
        }
    }

    std::uint64_t integer() {
        std::size_t start = pos_;
        std::uint64_t v = 0;
        bool any = false;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
                throw SyntaxError(start, "integer within 64-bit range");
            v = v * 10 + digit;
            any = true;
            ++pos_;
        }
        if (!any) throw SyntaxError(pos_, "decimal integer");
        return v;
    }
};

void format_impl(const GroupExpr& e, std::string& out, bool parenthesize) {
    switch (e.tag) {
        case GroupExpr::Tag::Cyclic:
            out += 'Z';
            out += std::to_string(e.n);
            break;
        case GroupExpr::Tag::Dihedral:
            out += 'D';
            out += std::to_string(e.n);
            break;
        case GroupExpr::Tag::Product:
            if (parenthesize) out += '(';
            format_impl(*e.left, out, true);
            out += " x ";
            format_impl(*e.right, out, true);
            if (parenthesize) out += ')';
            break;
    }
}

}  // namespace

GroupExprPtr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string format_group_expr(const GroupExpr& expr) {
    std::string out;
    format_impl(expr, out, false);
    return out;
}

}  // namespace ogs

#pragma once

// Recursive-descent parser for polynomial expressions:
//
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := ident | rational | '(' expr ')'
//   rational := int ('/' uint)?
//
// Whitespace-insensitive; identifiers must be ring variables. The printer
// in Polynomial::to_string emits a subset of this grammar, so
// parse(print(p)) == p on canonical forms.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "pfaff/polynomial.hpp"

namespace pfaff {

namespace detail {

class ExprParser {
  public:
    ExprParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

  private:
    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            Polynomial t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip_ws();
            if (peek() != '*')
                break;
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            std::uint64_t e = parse_uint("exponent");
            if (e > ring_.max_exponent())
                throw DegreeLimitError("exponent " + std::to_string(e) +
                                       " exceeds ring limit " +
                                       std::to_string(ring_.max_exponent()));
            b = b.pow(static_cast<std::uint32_t>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-')
            return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return identifier();
        fail("expected identifier, number, or '('");
    }

    Polynomial rational_literal() {
        std::size_t start = pos_;
        if (peek() == '-')
            ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected digits");
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        Integer num(std::string(text_.substr(start, pos_ - start)), 10);
        Integer den(1);
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            den = Integer(std::to_string(parse_uint("denominator")), 10);
            if (den == 0)
                fail("zero denominator");
        }
        return Polynomial::constant(ring_, rational_from_parts(num, den));
    }

    Polynomial identifier() {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto idx = ring_.index_of(name);
        if (!idx)
            throw ParseError("unknown identifier '" + name + "'", start);
        return Polynomial::variable(ring_, *idx);
    }

    std::uint64_t parse_uint(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > (1ull << 32))
                fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
    return detail::ExprParser(text, ring).run();
}

} // namespace pfaff

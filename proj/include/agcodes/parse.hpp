#pragma once

#include <cctype>
#include <string>

#include "agcodes/errors.hpp"
#include "agcodes/rational.hpp"

namespace agcodes {
namespace detail {

/// Recursive-descent parser for the expression grammar shared by polynomial,
/// rational-function and matrix-entry text:
///
///   expr   := ['+'|'-'] term { ('+'|'-') term }
///   term   := factor { ('*'|'/') factor }
///   factor := atom [ '^' ['-'] integer ]
///   atom   := integer | 'x' | 't' | '(' expr ')'
///
/// All arithmetic happens in the rational-function field, so inputs like
/// "(x^2+3)/(x+1)" and "1/x^2" come out reduced and canonical.
class ExprParser {
public:
    ExprParser(std::string_view text, FieldRef F, int line, int column)
        : text_(text), F_(std::move(F)), line_(line), col_base_(column) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    RationalFunction expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = get() == '-';
        RationalFunction r = term();
        if (negate) r = -r;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                RationalFunction t = term();
                r = (c == '+') ? r + t : r - t;
            } else {
                return r;
            }
        }
    }

    RationalFunction term() {
        RationalFunction r = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                get();
                RationalFunction f = factor();
                if (c == '/') {
                    if (f.is_zero()) fail("division by zero");
                    r = r / f;
                } else {
                    r = r * f;
                }
            } else {
                return r;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction a = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            bool neg = false;
            if (peek() == '-') { get(); neg = true; }
            long long e = integer();
            if (neg && a.is_zero()) fail("zero to a negative power");
            a = a.pow(neg ? -e : e);
        }
        return a;
    }

    RationalFunction atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            RationalFunction r = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            get();
            return r;
        }
        if (c == 'x') {
            get();
            return RationalFunction::x(F_);
        }
        if (c == 't') {
            get();
            if (F_->is_prime_field()) fail("generator 't' needs an extension field");
            return RationalFunction::constant(F_, F_->base()->size());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RationalFunction::constant(F_, F_->from_int(integer()));
        }
        fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected character '") + c + "'");
        return RationalFunction::zero(F_);  // unreachable
    }

    long long integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > (1LL << 40)) fail("integer literal too large");
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_base_ = -int(pos_);  // next char gets column 1
            }
            ++pos_;
        }
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, col_base_ + int(pos_));
    }

    std::string_view text_;
    FieldRef F_;
    size_t pos_ = 0;
    int line_;
    int col_base_;  // column of text_[0] minus 1
};

}  // namespace detail

/// Parse rational-function text like "(x^2+3)/(x+1)".  line/column seed the
/// locations in error messages when the text is embedded in a larger file.
inline RationalFunction parse_rational(std::string_view text, const FieldRef& F, int line = 1,
                                       int column = 1) {
    return detail::ExprParser(text, F, line, column).parse();
}

inline Polynomial parse_polynomial(std::string_view text, const FieldRef& F, int line = 1,
                                   int column = 1) {
    RationalFunction r = parse_rational(text, F, line, column);
    if (!r.is_polynomial()) throw parse_error("expected a polynomial, got a proper fraction", line, column);
    return r.num();
}

}  // namespace agcodes

/*
   Copyright 2026 The radrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "radrep/expression.hpp"

#include <cctype>
#include <cstddef>

namespace radrep {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw Error("ParseError", "empty number literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }

    const std::size_t slash = text.find('/', pos);
    if (slash != std::string::npos) {
        // Plain fraction "a/b" with integer parts.
        mpz_class num, den;
        if (num.set_str(text.substr(pos, slash - pos), 10) != 0 ||
            den.set_str(text.substr(slash + 1), 10) != 0 || den == 0) {
            throw Error("ParseError", "bad fraction literal '" + text + "'");
        }
        Rational q(num, den);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
        seen_digit = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++frac_digits;
            seen_digit = true;
        }
    }
    long exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size()) throw Error("ParseError", "bad exponent in '" + text + "'");
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            exponent = exponent * 10 + (text[pos++] - '0');
        }
        if (exp_negative) exponent = -exponent;
    }
    if (!seen_digit || pos != text.size()) {
        throw Error("ParseError", "bad number literal '" + text + "'");
    }

    mpz_class mantissa;
    if (digits.empty() || mantissa.set_str(digits, 10) != 0) {
        throw Error("ParseError", "bad number literal '" + text + "'");
    }
    Rational value(mantissa);
    const long net = exponent - frac_digits;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    if (net >= 0) {
        value *= Rational(ten_pow);
    } else {
        value /= Rational(ten_pow);
    }
    return negative ? Rational(-value) : value;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    RationalFunction parse() {
        RationalFunction value = expression();
        skip_space();
        if (pos_ != text_.size()) {
            throw Error("ParseError", "unexpected trailing input at position " + std::to_string(pos_));
        }
        return value;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RationalFunction expression() {
        RationalFunction value = term();
        while (true) {
            if (consume('+')) {
                value += term();
            } else if (consume('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    RationalFunction term() {
        RationalFunction value = factor();
        while (true) {
            if (consume('*')) {
                value *= factor();
            } else if (consume('/')) {
                RationalFunction divisor = factor();
                if (divisor.is_zero()) {
                    throw Error("ParseError", "division by an identically zero expression");
                }
                value /= divisor;
            } else {
                return value;
            }
        }
    }

    RationalFunction factor() {
        if (consume('-')) {
            return -factor();
        }
        if (consume('+')) {
            return factor();
        }
        RationalFunction base = primary();
        if (consume('^')) {
            const int exponent = integer_exponent();
            if (exponent < 0 && base.is_zero()) {
                throw Error("ParseError", "negative power of an identically zero expression");
            }
            return base.pow(exponent);
        }
        return base;
    }

    RationalFunction primary() {
        skip_space();
        if (pos_ >= text_.size()) throw Error("ParseError", "unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction value = expression();
            if (!consume(')')) throw Error("ParseError", "missing closing parenthesis");
            return value;
        }
        if (c == 't') {
            ++pos_;
            if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                throw Error("ParseError", "unknown identifier near position " + std::to_string(pos_));
            }
            return RationalFunction::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return RationalFunction::constant(number_literal());
        }
        throw Error("ParseError", std::string("unexpected character '") + c + "'");
    }

    /// Digits with optional decimal point and exponent. The '/' of a
    /// fraction like 2/5 is handled upstream as a division.
    Rational number_literal() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t lookahead = pos_ + 1;
            if (lookahead < text_.size() && (text_[lookahead] == '+' || text_[lookahead] == '-')) {
                ++lookahead;
            }
            if (lookahead < text_.size() && std::isdigit(static_cast<unsigned char>(text_[lookahead]))) {
                pos_ = lookahead;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        if (pos_ == start) throw Error("ParseError", "expected a number");
        return rational_from_string(text_.substr(start, pos_ - start));
    }

    int integer_exponent() {
        skip_space();
        bool parenthesized = consume('(');
        skip_space();
        bool negative = consume('-');
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw Error("ParseError", "exponent must be an integer");
        if (pos_ < text_.size() && text_[pos_] == '.') {
            throw Error("ParseError", "exponent must be an integer");
        }
        // A '/' after a parenthesized exponent body would make it fractional;
        // outside parentheses it belongs to the enclosing term (t^4/12).
        if (parenthesized && pos_ < text_.size() && text_[pos_] == '/') {
            throw Error("ParseError", "exponent must be an integer");
        }
        int value = 0;
        for (std::size_t k = start; k < pos_; ++k) value = value * 10 + (text_[k] - '0');
        if (parenthesized && !consume(')')) {
            throw Error("ParseError", "missing closing parenthesis in exponent");
        }
        return negative ? -value : value;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_expression(const std::string& text) {
    try {
        return Parser(text).parse();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("ParseError", e.what());
    }
}

} // namespace radrep

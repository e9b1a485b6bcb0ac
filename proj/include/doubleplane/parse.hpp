/*
   Copyright 2026 The doubleplane authors

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

#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "doubleplane/polynomial.hpp"

namespace doubleplane {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Parser for the shared polynomial syntax: sums of terms such as
// `3*y^2*z - t^3 + x*y*t`, with variables drawn from the target ring.
class PolynomialParser {
public:
    PolynomialParser(std::string_view text, Ring ring, std::uint32_t prime,
                     int line = 1, int column = 1)
        : text_(text), ring_(ring), prime_(prime), line_(line), col0_(column) {}

    Polynomial parse() {
        Polynomial f = parse_expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return f;
    }

private:
    Polynomial parse_expression() {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = get() == '-';
        }
        Polynomial acc = parse_term();
        if (negate) acc = acc.negated();
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Polynomial t = parse_term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial parse_term() {
        skip_space();
        bool have_factor = false;
        std::int64_t coeff = 1;
        Monomial mono(ring_);
        for (;;) {
            skip_space();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::int64_t v = parse_integer();
                coeff = (coeff % prime_) * (v % prime_);
                have_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                int idx = variable_index(c);
                get();
                int e = 1;
                skip_space();
                if (peek() == '^') {
                    get();
                    skip_space();
                    if (!std::isdigit(static_cast<unsigned char>(peek())))
                        fail("exponent expected after '^'");
                    e = static_cast<int>(parse_integer());
                }
                int cur = mono.exp(idx);
                if (cur + e > 255) fail("exponent too large");
                mono.set_exp(idx, cur + e);
                have_factor = true;
            } else {
                break;
            }
            skip_space();
            if (peek() == '*') {
                get();
                continue;
            }
            // factors may also be juxtaposed without '*'
            char n = peek();
            if (std::isalnum(static_cast<unsigned char>(n))) continue;
            break;
        }
        if (!have_factor) fail("term expected");
        return Polynomial::term(mono, coeff, prime_);
    }

    std::int64_t parse_integer() {
        std::int64_t v = 0;
        int digits = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (++digits > 18) fail("integer literal too long");
        }
        return v;
    }

    int variable_index(char c) {
        const char* names = var_names(ring_);
        for (int i = 0; names[i]; ++i)
            if (names[i] == c) return i;
        fail(std::string("unknown variable '") + c + "' in this ring");
        return -1;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '\n')
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col0_ + static_cast<int>(pos_));
    }

    std::string_view text_;
    Ring ring_;
    std::uint32_t prime_;
    std::size_t pos_ = 0;
    int line_;
    int col0_;
};

inline Polynomial parse_polynomial(std::string_view text, Ring ring,
                                   std::uint32_t prime, int line = 1,
                                   int column = 1) {
    return PolynomialParser(text, ring, prime, line, column).parse();
}

}  // namespace doubleplane

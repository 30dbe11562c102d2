/*
   Copyright 2026 the kleinian library authors

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

#include "invariants.hpp"

namespace kleinian {

// Exact expression grammar for command-line literals and candidates:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*          division by constants only
//   factor := ('-')* primary ('^' nonneg-integer)?
//   primary:= integer | 'zeta' '(' integer ')' | 'X' | 'Y' | 'Z' | '(' expr ')'
// so rationals are written a/b and roots of unity zeta(N)^k, combined with
// + - * /. The X, Y, Z symbols are only admitted in candidate mode.

class ExprParser {
  public:
    ExprParser(const CycloField& f, std::string text, bool allow_xyz)
        : field_(f), text_(std::move(text)), allow_xyz_(allow_xyz) {}

    XyzPoly parse() {
        XyzPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw std::invalid_argument("unexpected input at '" + text_.substr(pos_) + "'");
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw std::invalid_argument("expected integer in expression");
        return std::stol(text_.substr(start, pos_ - start));
    }

    XyzPoly parse_expr() {
        XyzPoly acc = parse_term();
        while (true) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else return acc;
        }
    }

    XyzPoly parse_term() {
        XyzPoly acc = parse_factor();
        while (true) {
            if (eat('*')) acc = acc * parse_factor();
            else if (eat('/')) {
                XyzPoly d = parse_factor();
                if (d.terms.size() != 1 || d.terms.begin()->first != XyzPoly::Exp{0, 0, 0})
                    throw std::invalid_argument("division only by nonzero constants");
                CycloNum inv = d.terms.begin()->second.invert();
                XyzPoly scaled(field_);
                for (const auto& [e, c] : acc.terms) scaled.add_term(e, inv * c);
                acc = scaled;
            } else
                return acc;
        }
    }

    XyzPoly parse_factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (eat('-')) neg = !neg;
            else eat('+');
        }
        XyzPoly p = parse_primary();
        if (eat('^')) {
            long e = parse_integer();
            if (e < 0) throw std::invalid_argument("negative exponents not supported");
            p = p.pow(static_cast<unsigned>(e));
        }
        if (neg) p = XyzPoly::constant(field_, Rational(0)) - p;
        return p;
    }

    XyzPoly parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw std::invalid_argument("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            XyzPoly p = parse_expr();
            if (!eat(')')) throw std::invalid_argument("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = parse_integer();
            return XyzPoly::constant(field_, Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string word = text_.substr(start, pos_ - start);
            if (word == "zeta") {
                if (!eat('(')) throw std::invalid_argument("zeta needs (N)");
                long n = parse_integer();
                if (!eat(')')) throw std::invalid_argument("zeta needs closing ')'");
                XyzPoly p(field_);
                p.add_term({0, 0, 0}, embedded_root_of_unity(field_, n, 1));
                return p;
            }
            if (allow_xyz_ && (word == "X" || word == "x")) return XyzPoly::variable(field_, 0);
            if (allow_xyz_ && (word == "Y" || word == "y")) return XyzPoly::variable(field_, 1);
            if (allow_xyz_ && (word == "Z" || word == "z")) return XyzPoly::variable(field_, 2);
            throw std::invalid_argument("unknown symbol '" + word + "'");
        }
        throw std::invalid_argument(std::string("unexpected character '") + c + "'");
    }

    const CycloField& field_;
    std::string text_;
    bool allow_xyz_;
    std::size_t pos_ = 0;
};

/// Exact scalar literal (rationals, zeta(N)^k, + - * /).
inline CycloNum parse_scalar(const CycloField& f, const std::string& text) {
    XyzPoly p = ExprParser(f, text, false).parse();
    if (p.terms.empty()) return CycloNum::zero(f);
    return p.constant_term();
}

/// Candidate polynomial in the abstract invariants X, Y, Z.
inline XyzPoly parse_candidate(const CycloField& f, const std::string& text) {
    return ExprParser(f, text, true).parse();
}

}  // namespace kleinian

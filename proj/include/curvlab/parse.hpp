#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "curvlab/poly.hpp"

namespace curvlab {

// Polynomial text grammar (used by the spec-file components):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ('-')* base ('^' uint)?
//   base   := rational | var | '(' expr ')'
//   var    := 'x' uint         (1-based coordinate)
//   rational := uint ('/' uint)?
class PolyParser {
public:
    PolyParser(std::string text, int num_vars) : text_(std::move(text)), num_vars_(num_vars) {}

    PolyScalar parse() {
        PolyScalar p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return p;
    }

private:
    PolyScalar parse_expr() {
        PolyScalar acc = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc += parse_term();
            } else if (peek() == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    PolyScalar parse_term() {
        PolyScalar acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc *= parse_factor();
            } else {
                return acc;
            }
        }
    }

    PolyScalar parse_factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-') {
            ++pos_;
            neg = !neg;
            skip_ws();
        }
        PolyScalar base = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            int e = parse_uint("exponent");
            PolyScalar pow = PolyScalar::constant(num_vars_, 1);
            for (int k = 0; k < e; ++k) pow *= base;
            base = pow;
        }
        return neg ? -base : base;
    }

    PolyScalar parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            PolyScalar p = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'x') {
            ++pos_;
            int v = parse_uint("coordinate index");
            if (v < 1 || v > num_vars_) fail("coordinate x" + std::to_string(v) + " out of range");
            return PolyScalar::variable(num_vars_, v - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = parse_bigint();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
                BigInt den = parse_bigint();
                if (den == 0) fail("zero denominator");
                return PolyScalar::constant(num_vars_, Rat(num, den));
            }
            return PolyScalar::constant(num_vars_, Rat(num));
        }
        fail("unexpected character");
    }

    BigInt parse_bigint() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        return BigInt(digits);
    }

    int parse_uint(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 1000000) fail("integer too large");
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw argument_error("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                             msg + " in \"" + text_ + "\"");
    }

    std::string text_;
    int num_vars_;
    size_t pos_ = 0;
};

inline PolyScalar parse_poly(const std::string& text, int num_vars) {
    return PolyParser(text, num_vars).parse();
}

/// Canonical text form; parse_poly(poly_to_string(p), m) == p.
inline std::string poly_to_string(const PolyScalar& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat coef = c;
        if (first) {
            if (coef < 0) {
                out << "-";
                coef = -coef;
            }
        } else {
            out << (coef < 0 ? " - " : " + ");
            if (coef < 0) coef = -coef;
        }
        first = false;
        bool has_vars = false;
        for (int k : e)
            if (k > 0) has_vars = true;
        if (coef != 1 || !has_vars) out << rat_to_string(coef);
        bool printed = (coef != 1 || !has_vars);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) out << "*";
            out << "x" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
            printed = true;
        }
    }
    return out.str();
}

} // namespace curvlab

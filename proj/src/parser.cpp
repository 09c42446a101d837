#include <cctype>

#include "rtp/poly.hpp"

namespace rtp {

namespace {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor | factor)*     (implicit '*' only after a
//                                                coefficient literal)
//   factor := base ('^' nat)?
//   base   := rat | var | '(' expr ')'
//   var    := 'x'|'y'|'z'|'w'
//   rat    := nat ('/' nat)?
//   nat    := [0-9]+
class Parser {
public:
    Parser(const std::string& text, int nvars) : text_(text), nvars_(nvars) {}

    MultiPoly parse() {
        skip_ws();
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& text_;
    int nvars_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    MultiPoly expr() {
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = (peek() == '-');
            ++pos_;
            skip_ws();
        }
        MultiPoly p = term();
        if (neg) p = -p;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            bool sub = (peek() == '-');
            ++pos_;
            skip_ws();
            MultiPoly t = term();
            p = sub ? p - t : p + t;
            skip_ws();
        }
        return p;
    }

    MultiPoly term() {
        bool was_literal = false;
        MultiPoly p = factor(&was_literal);
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                skip_ws();
                p = p * factor(&was_literal);
            } else if (was_literal && (is_var(c) || c == '(')) {
                // implicit multiplication after a coefficient, e.g. "2x"
                p = p * factor(&was_literal);
            } else {
                break;
            }
        }
        return p;
    }

    MultiPoly factor(bool* was_literal) {
        MultiPoly b = base(was_literal);
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (peek() == '-') throw NegativeExponent(pos_);
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError("expected exponent", pos_);
            int n = nat();
            b = b.pow(n);
            *was_literal = false;
        }
        return b;
    }

    MultiPoly base(bool* was_literal) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            Int value = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                value = value * 10 + (peek() - '0');
                ++pos_;
            }
            (void)start;
            *was_literal = true;
            if (peek() == '/') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw SyntaxError("expected denominator", pos_);
                Int den = 0;
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    den = den * 10 + (peek() - '0');
                    ++pos_;
                }
                if (den == 0) throw SyntaxError("zero denominator", pos_);
                return MultiPoly::constant(Rat(value, den), nvars_);
            }
            return MultiPoly::constant(Rat(value), nvars_);
        }
        if (is_var(c)) {
            int v = var_index(c);
            if (v >= nvars_) throw UnknownVariable(c, pos_);
            ++pos_;
            *was_literal = false;
            return MultiPoly::variable(v, nvars_);
        }
        if (c == '(') {
            ++pos_;
            skip_ws();
            MultiPoly p = expr();
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            *was_literal = false;
            return p;
        }
        if (c >= 'a' && c <= 'z') throw UnknownVariable(c, pos_);
        throw SyntaxError("expected number, variable or '('", pos_);
    }

    int nat() {
        int value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos_;
            if (value > 100000) throw SyntaxError("exponent too large", pos_);
        }
        return value;
    }

    static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }
    static int var_index(char c) {
        switch (c) {
            case 'x': return 0;
            case 'y': return 1;
            case 'z': return 2;
            default: return 3;
        }
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, int nvars) {
    return Parser(text, nvars).parse();
}

}  // namespace rtp

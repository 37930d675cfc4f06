#include "hautus/poly_text.hpp"

#include "hautus/errors.hpp"

#include <cctype>
#include <sstream>

namespace hautus {

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // reverse map order = descending degrevlex
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit_coeff = (a == 1);
        if (!unit_coeff || m.is_one()) out << rational_to_string(a);
        bool star = !unit_coeff && !m.is_one();
        for (int v = 0; v < m.nvars(); ++v) {
            const int e = m.exponent(v);
            if (e == 0) continue;
            if (star) out << "*";
            out << "d" << (v + 1);
            if (e > 1) out << "^" << e;
            star = true;
        }
    }
    return out.str();
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int nvars, int line_offset, int column_offset)
        : text_(text), nvars_(nvars), line_(1 + line_offset), col_base_(column_offset) {}

    Poly parse() {
        skip_ws();
        if (eof()) fail("empty polynomial");
        Poly p = parse_expr();
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, col_base_ + col_);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
            col_base_ = 0;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    bool accept(char c) {
        skip_ws();
        if (!eof() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    Poly parse_expr() {
        int sign = 1;
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            advance();
        }
        Poly acc = parse_term().scaled(Rational(sign));
        for (;;) {
            skip_ws();
            if (eof() || (peek() != '+' && peek() != '-')) return acc;
            const int s = peek() == '-' ? -1 : 1;
            advance();
            acc += parse_term().scaled(Rational(s));
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (accept('*')) acc *= parse_factor();
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (accept('^')) {
            skip_ws();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected a non-negative integer exponent after '^'");
            return base.pow(static_cast<unsigned>(parse_unsigned()));
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (eof()) fail("unexpected end of input");
        const char c = peek();
        if (c == '(') {
            advance();
            Poly inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer();
            if (accept('/')) {
                skip_ws();
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected a denominator after '/'");
                Integer den = parse_integer();
                if (den == 0) fail("zero denominator");
                return Poly::constant(nvars_, Rational(num, den));
            }
            return Poly::constant(nvars_, Rational(num));
        }
        if (c == 'd') {
            const int start_col = col_base_ + col_;
            advance();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw parse_error("malformed variable (expected d1..d" +
                                      std::to_string(nvars_) + ")",
                                  line_, start_col);
            const Integer idx = parse_integer();
            if (idx < 1 || idx > nvars_)
                throw parse_error("unknown variable name 'd" + idx.str() + "' (declared d1..d" +
                                      std::to_string(nvars_) + ")",
                                  line_, start_col);
            return Poly::variable(nvars_, static_cast<int>(idx) - 1);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Integer parse_integer() {
        Integer v(0);
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            advance();
        }
        return v;
    }

    long parse_unsigned() {
        const Integer v = parse_integer();
        if (v > 1000000) fail("exponent too large");
        return static_cast<long>(v);
    }

    std::string_view text_;
    int nvars_;
    size_t pos_ = 0;
    int line_;
    int col_ = 1;
    int col_base_;
};

} // namespace

Poly parse_poly(std::string_view text, int nvars, int line_offset, int column_offset) {
    if (nvars < 0) throw std::invalid_argument("parse_poly: negative variable count");
    return PolyParser(text, nvars, line_offset, column_offset).parse();
}

} // namespace hautus

#ifndef LOGCONTACT_PARSE_HPP
#define LOGCONTACT_PARSE_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "logcontact/rational_function.hpp"

namespace logcontact {

// Expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] atom ['^' uint]
//   atom   := ident | uint | '(' expr ')'
// '^' binds tightest (so -x^2 means -(x^2)); whitespace is insignificant.
// Identifiers: [A-Za-z][A-Za-z0-9_']*
namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    RationalFunction run() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    RationalFunction expr() {
        RationalFunction r = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                r = r + term();
            } else if (peek() == '-') {
                ++pos_;
                r = r - term();
            } else {
                return r;
            }
        }
    }

    RationalFunction term() {
        RationalFunction r = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                r = r * factor();
            } else if (peek() == '/') {
                std::size_t at = pos_;
                ++pos_;
                RationalFunction d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RationalFunction factor() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        RationalFunction a = atom();
        skip_ws();
        if (peek() == '^') {
            std::size_t at = ++pos_;
            skip_ws();
            if (!std::isdigit(peek())) throw ParseError("expected nonnegative integer exponent", at);
            int e = uint_literal_small();
            a = a.pow(e);
        }
        return neg ? -a : a;
    }

    RationalFunction atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (std::isdigit(c)) {
            Int n = 0;
            while (std::isdigit(peek())) {
                n = n * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return RationalFunction::constant(vars_, Rational(n));
        }
        if (std::isalpha(c)) {
            std::size_t at = pos_;
            std::string name;
            name += text_[pos_++];
            while (std::isalnum(peek()) || peek() == '_' || peek() == '\'')
                name += text_[pos_++];
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return RationalFunction::variable(vars_, i);
            throw ParseError("unknown identifier '" + name + "'", at);
        }
        throw ParseError("expected identifier, number or '('", pos_);
    }

    int uint_literal_small() {
        long v = 0;
        std::size_t at = pos_;
        while (std::isdigit(peek())) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large", at);
            ++pos_;
        }
        return static_cast<int>(v);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse an expression over the given variable universe into canonical form.
inline RationalFunction parse_rational(const std::string& text,
                                       const std::vector<std::string>& vars) {
    return detail::ExprParser(text, vars).run();
}

inline std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // graded-lex descending so the leading term prints first
    for (auto it = terms().rbegin(); it != terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool trivial = true;
        for (int x : e)
            if (x != 0) trivial = false;
        bool coeff_shown = trivial || a != 1;
        if (coeff_shown) {
            os << numerator(a).str();
            if (denominator(a) != 1) os << "/" << denominator(a).str();
        }
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars()[i];
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

inline std::string RationalFunction::str() const {
    if (den().is_constant() && den().constant_value() == 1) return num().str();
    std::string n = num().str();
    if (num().terms().size() > 1) n = "(" + n + ")";
    std::string d = den().str();
    if (den().terms().size() > 1 || !den().is_constant()) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace logcontact

#endif

#pragma once

// Polynomial expression parser and canonical printer.
//
//   expr    = [ sign ] term { sign term } ;
//   sign    = "+" | "-" ;
//   term    = factor { "*" factor } ;
//   factor  = "-" factor | power ;
//   power   = primary [ "^" digits ] ;
//   primary = number | identifier | "(" expr ")" ;
//   number  = digits [ "/" digits ] ;
//
// Whitespace is ignored between tokens.

#include "gmf/polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace gmf {

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : InputError("parse error at offset " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

template <Coefficient K>
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const GradedRing& ring) : s_(text), ring_(ring) {}

    Polynomial<K> run() {
        skip();
        if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
        Polynomial<K> p = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    K one() const { return K::from_int(ring_.field(), 1); }

    Polynomial<K> expr() {
        Polynomial<K> acc;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial<K> term() {
        Polynomial<K> acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Polynomial<K> factor() {
        if (accept('-')) return -factor();
        return power();
    }

    Polynomial<K> power() {
        Polynomial<K> base = primary();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError("expected exponent after '^'", start);
            if (digits.size() > 4 || std::stoi(digits) > 1000) throw ParseError("exponent too large", start);
            return base.pow(static_cast<unsigned>(std::stoi(digits)), ring_.field());
        }
        return base;
    }

    Polynomial<K> primary() {
        skip();
        if (pos_ == s_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial<K> inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            mpz_class num(read_digits());
            mpz_class den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::string d = read_digits();
                if (d.empty()) throw ParseError("expected denominator after '/'", pos_);
                den = mpz_class(d);
            }
            try {
                return Polynomial<K>::constant(K::from_fraction(ring_.field(), num, den));
            } catch (const InputError& e) {
                throw ParseError(std::string("coefficient not in field: ") + e.what(), start);
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            int idx = ring_.index_of(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial<K>::monomial(ring_.variable(static_cast<std::size_t>(idx)), one());
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    const GradedRing& ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <Coefficient K>
Polynomial<K> parse_polynomial(std::string_view text, const GradedRing& ring) {
    return detail::ExpressionParser<K>(text, ring).run();
}

inline std::string monomial_to_string(const Monomial& m, const GradedRing& ring) {
    std::string out;
    for (std::size_t i = 0; i < ring.num_vars(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.names()[i];
        if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
    }
    return out.empty() ? "1" : out;
}

/// Canonical form: terms in decreasing grevlex order, unit coefficients elided.
template <Coefficient K>
std::string to_string(const Polynomial<K>& p, const GradedRing& ring) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        std::string piece;
        if (t.mono.is_one()) {
            piece = t.coeff.to_string();
        } else if (t.coeff.is_one()) {
            piece = monomial_to_string(t.mono, ring);
        } else if ((-t.coeff).is_one()) {
            piece = "-" + monomial_to_string(t.mono, ring);
        } else {
            piece = t.coeff.to_string() + "*" + monomial_to_string(t.mono, ring);
        }
        if (!out.empty() && piece.front() != '-') out += '+';
        out += piece;
    }
    return out;
}

}  // namespace gmf

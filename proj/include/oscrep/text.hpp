#pragma once

// The polynomial text grammar shared by the CLI and the test fixtures.
//
//   poly   :=  [sign] term (sign term)*
//   term   :=  coeff ['*' factors]  |  [coeff '*'?] factors
//   factors:=  factor (['*'] factor)*
//   factor :=  ('x'|'y') digits ['^' digits]
//   coeff  :=  digits ['/' digits]
//
// Whitespace is insignificant everywhere; '^1' may be omitted; a missing
// coefficient means 1. Serialization emits terms in the canonical monomial
// order with '*' joining all factors, and parses back to an equal value.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "oscrep/polynomial.hpp"

namespace oscrep {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    Polynomial parse() {
        Polynomial out;
        skip_ws();
        if (at_end()) throw error("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (get() == '-') ? -1 : 1;
                skip_ws();
            } else if (!first) {
                throw error("expected '+' or '-' between terms");
            }
            out += parse_term(sign);
            skip_ws();
            first = false;
        }
        return out;
    }

private:
    Polynomial parse_term(int sign) {
        Scalar coeff(sign);
        bool saw_coeff = false;
        if (at_end()) throw error("dangling sign");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_rational();
            saw_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                skip_ws();
            }
        }
        std::vector<Monomial::Factor> factors;
        bool saw_factor = false;
        while (!at_end() && (peek() == 'x' || peek() == 'y')) {
            factors.push_back(parse_factor());
            saw_factor = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                skip_ws();
                if (at_end() || (peek() != 'x' && peek() != 'y'))
                    throw error("expected a variable after '*'");
            }
        }
        if (!saw_coeff && !saw_factor) throw error(std::string("unexpected character '") + peek() + "'");
        return Polynomial::term(Monomial::collect(std::move(factors)), coeff);
    }

    Monomial::Factor parse_factor() {
        char axis = get();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw error(std::string("expected an index after '") + axis + "'");
        std::uint32_t index = parse_number();
        std::uint32_t exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            get();
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw error("expected an exponent after '^'");
            exp = parse_number();
        }
        VarId v = (axis == 'x') ? VarId::x(index) : VarId::y(index);
        return {v, exp};
    }

    Scalar parse_rational() {
        std::string digits = parse_digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            get();
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw error("expected a denominator after '/'");
            digits += "/" + parse_digits();
        }
        return scalar_from_string(digits);
    }

    std::uint32_t parse_number() {
        unsigned long v = std::stoul(parse_digits());
        return static_cast<std::uint32_t>(v);
    }

    std::string parse_digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
        return d;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    ParseError error(const std::string& msg) const {
        return ParseError(msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

inline std::string monomial_factors_string(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += v.name();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text) {
    return detail::PolyParser(text).parse();
}

/// Canonical serialization, e.g. "-3/2*x1^2*y3 + x2*y2". The zero polynomial
/// prints as "0".
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        Scalar mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string factors = detail::monomial_factors_string(m);
        if (factors.empty())
            out += scalar_to_string(mag);
        else if (mag == 1)
            out += factors;
        else
            out += scalar_to_string(mag) + "*" + factors;
    }
    return out;
}

}  // namespace oscrep

#include "redop/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace redop {

Polynomial poly_mono_mul(const Polynomial& p, const Monomial& m,
                         const Rational& c) {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [mono, coeff] : p.terms)
        out.terms.emplace(mono.times(m), coeff * c);
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [m, c] : a.terms) out.add_scaled(poly_mono_mul(b, m), c);
    return out;
}

std::string monomial_to_string(const Monomial& m,
                               std::span<const std::string> variables) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    // highest-precedence variable first
    const auto& exps = m.exponents();
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (!first) out << "*";
        out << variables[it->first];
        if (it->second > 1) out << "^" << it->second;
        first = false;
    }
    return out.str();
}

std::string poly_to_string(const Polynomial& p,
                           std::span<const std::string> variables) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (it->first.is_one())
            out << to_string(c);
        else if (c == 1)
            out << monomial_to_string(it->first, variables);
        else
            out << to_string(c) << "*"
                << monomial_to_string(it->first, variables);
        first = false;
    }
    return out.str();
}

namespace {

class Parser {
public:
    Parser(const std::string& text, std::span<const std::string> variables)
        : text_(text), variables_(variables) {}

    Polynomial run() {
        Polynomial p;
        skip_space();
        if (at_end()) throw ParseError(pos_, "empty polynomial");
        bool first = true;
        while (!at_end()) {
            Rational sign = 1;
            skip_space();
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-'");
            }
            auto [coeff, mono] = parse_term();
            p.add_term(mono, coeff * sign);
            skip_space();
            first = false;
        }
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::pair<Rational, Monomial> parse_term() {
        skip_space();
        Rational coeff = 1;
        Monomial mono;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            have_factor = true;
        }
        for (;;) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
            } else if (have_factor) {
                break;  // no explicit '*', term ends
            }
            if (std::isalpha(static_cast<unsigned char>(peek())) ||
                peek() == '_') {
                mono = mono.times(parse_variable_power());
                have_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_rational();
                have_factor = true;
            } else {
                throw ParseError(pos_, "expected a variable or a number");
            }
        }
        return {coeff, mono};
    }

    Rational parse_rational() {
        const size_t start = pos_;
        std::string digits = parse_digits();
        if (peek() == '/') {
            ++pos_;
            std::string den = parse_digits();
            if (den.empty())
                throw ParseError(pos_, "expected a denominator");
            if (rational_from_string(den) == 0)
                throw ParseError(start, "zero denominator");
            return rational_from_string(digits + "/" + den);
        }
        return rational_from_string(digits);
    }

    std::string parse_digits() {
        const size_t start = pos_;
        while (!at_end() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected digits");
        return text_.substr(start, pos_ - start);
    }

    Monomial parse_variable_power() {
        const size_t start = pos_;
        while (!at_end() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        int index = -1;
        for (size_t v = 0; v < variables_.size(); ++v)
            if (variables_[v] == name) {
                index = static_cast<int>(v);
                break;
            }
        if (index < 0)
            throw ParseError(start, "unknown variable '" + name + "'");
        int exponent = 1;
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const size_t digits_at = pos_;
            const std::string digits = parse_digits();
            try {
                exponent = std::stoi(digits);
            } catch (const std::exception&) {
                throw ParseError(digits_at, "exponent out of range");
            }
        }
        return Monomial::variable(index, exponent);
    }

    const std::string& text_;
    std::span<const std::string> variables_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            std::span<const std::string> variables) {
    return Parser(text, variables).run();
}

}  // namespace redop

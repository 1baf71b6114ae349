#pragma once

#include "redop/monomial.hpp"
#include "redop/sparse_row.hpp"

#include <span>
#include <stdexcept>
#include <string>

namespace redop {

// Commutative polynomial: monomial -> nonzero coefficient, ordered by the
// degree-reverse-lexicographic order, so leading_key() is the leading
// monomial.
using Polynomial = SparseRow<Monomial>;

inline int poly_degree(const Polynomial& p) {
    int d = -1;  // degree of the zero polynomial
    for (const auto& [m, c] : p.terms) d = std::max(d, m.total_degree());
    return d;
}

Polynomial poly_mono_mul(const Polynomial& p, const Monomial& m,
                         const Rational& c = 1);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

std::string monomial_to_string(const Monomial& m,
                               std::span<const std::string> variables);
std::string poly_to_string(const Polynomial& p,
                           std::span<const std::string> variables);

struct ParseError : std::runtime_error {
    ParseError(size_t position, const std::string& message)
        : std::runtime_error(message + " at position " +
                             std::to_string(position + 1)),
          position(position) {}
    size_t position;
};

// Terms like "3*x^2*y - 1/2*z^3 + t". Variables must come from `variables`
// (listed in increasing precedence). Throws ParseError with the offending
// position.
Polynomial parse_polynomial(const std::string& text,
                            std::span<const std::string> variables);

}  // namespace redop

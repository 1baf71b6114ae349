#pragma once

#include "redop/completion.hpp"
#include "redop/polynomial.hpp"

namespace redop {

// Finite-dimensional slice of the polynomial algebra: all monomials of total
// degree at most the bound, well-ordered by the degree-reverse-lexicographic
// order, as an OrderedBasis. Makes the operator constructions executable;
// every verdict downstream is certified up to this degree only.
class TruncatedContext {
public:
    TruncatedContext(std::vector<std::string> variables, int degree_bound);

    const std::vector<std::string>& variables() const { return variables_; }
    int degree_bound() const { return degree_bound_; }
    const BasisPtr& ambient() const { return ambient_; }

    int rank_of(const Monomial& m) const;  // throws if out of the slice
    const Monomial& monomial_at(int rank) const { return monomials_.at(rank); }

    Vector to_vector(const Polynomial& p) const;
    Polynomial to_polynomial(const Vector& v) const;

private:
    std::vector<std::string> variables_;
    int degree_bound_;
    std::vector<Monomial> monomials_;      // ascending order
    std::map<Monomial, int> rank_;
    BasisPtr ambient_;
};

// The operator whose kernel is the degree slice of the principal ideal of f:
// span of m*f over all monomials m with deg(m) + deg(f) within the bound.
// Reducible generators are exactly the in-slice multiples of lt(f).
ReductionOperator operator_from_polynomial(const TruncatedContext& ctx,
                                           const Polynomial& f);

OperatorFamily family_from_polynomials(const TruncatedContext& ctx,
                                       std::span<const Polynomial> polys,
                                       std::vector<std::string> names = {});

// R is a Groebner basis (up to the context's degree bound) iff the associated
// operator family is confluent.
bool is_groebner(const TruncatedContext& ctx, std::span<const Polynomial> r);

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b);
// Full multivariate division remainder: no term of the result is divisible by
// any divisor's leading monomial. Deterministic: the greatest reducible term
// and the first matching divisor are picked each step.
Polynomial division_remainder(Polynomial p, std::span<const Polynomial> divisors);

struct UselessReduction {
    int poly_index;        // 0-based position in the completed basis
    Monomial cofactor;     // m with m*lt(f_i) reducible for the prefix join
    Monomial reducible;    // m*lt(f_i) itself, the rejected overlap
    Polynomial join_image; // image of the overlap under the prefix join
};

struct GroebnerResult {
    std::vector<Polynomial> basis;  // inputs followed by monic additions
    int input_count = 0;
    std::vector<UselessReduction> useless;
    bool verified = false;  // is_groebner on the final basis
    std::vector<std::string> warnings;
};

// Incremental completion over the polynomial list with the lattice criterion:
// a critical pair whose overlap is already reducible for
// (T_1 ^ ... ^ T_{i-1}) v T_i is rejected as useless; the surviving pairs
// contribute reduced S-polynomials as new basis elements.
GroebnerResult complete_groebner(const TruncatedContext& ctx,
                                 std::span<const Polynomial> input);

// Whether sum of cofactor*r[index] over lhs equals the same over rhs, as
// plain polynomials.
bool verify_syzygy_identity(
    std::span<const std::pair<Polynomial, int>> lhs,
    std::span<const std::pair<Polynomial, int>> rhs,
    std::span<const Polynomial> r);

}  // namespace redop

#include "redop/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace redop {

namespace {

void enumerate_monomials(int nvars, int max_degree, int var, Monomial current,
                         std::vector<Monomial>& out) {
    if (var == nvars) {
        out.push_back(current);
        return;
    }
    for (int e = 0; current.total_degree() + e <= max_degree; ++e)
        enumerate_monomials(nvars, max_degree, var + 1,
                            e == 0 ? current
                                   : current.times(Monomial::variable(var, e)),
                            out);
}

}  // namespace

TruncatedContext::TruncatedContext(std::vector<std::string> variables,
                                   int degree_bound)
    : variables_(std::move(variables)), degree_bound_(degree_bound) {
    if (variables_.empty())
        throw std::invalid_argument("no variables declared");
    if (degree_bound_ < 1)
        throw std::invalid_argument("degree bound must be positive");
    enumerate_monomials(static_cast<int>(variables_.size()), degree_bound_, 0,
                        Monomial(), monomials_);
    if (monomials_.size() > 500000)
        throw std::invalid_argument("truncated monomial basis too large");
    std::sort(monomials_.begin(), monomials_.end());
    std::vector<std::string> names;
    names.reserve(monomials_.size());
    for (int i = 0; i < static_cast<int>(monomials_.size()); ++i) {
        rank_.emplace(monomials_[i], i);
        names.push_back(monomial_to_string(monomials_[i], variables_));
    }
    ambient_ = make_basis(std::move(names));
}

int TruncatedContext::rank_of(const Monomial& m) const {
    auto it = rank_.find(m);
    if (it == rank_.end())
        throw std::invalid_argument("monomial exceeds truncation bound");
    return it->second;
}

Vector TruncatedContext::to_vector(const Polynomial& p) const {
    Vector v(ambient_);
    for (const auto& [m, c] : p.terms) v.set(rank_of(m), c);
    return v;
}

Polynomial TruncatedContext::to_polynomial(const Vector& v) const {
    require_same_basis(ambient_, v.basis());
    Polynomial p;
    for (const auto& [rank, c] : v.row().terms)
        p.terms.emplace(monomials_.at(rank), c);
    return p;
}

ReductionOperator operator_from_polynomial(const TruncatedContext& ctx,
                                           const Polynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("zero polynomial has no reduction operator");
    const int deg = poly_degree(f);
    if (deg > ctx.degree_bound())
        throw std::invalid_argument("polynomial exceeds truncation bound");
    std::vector<Vector> slice;
    for (int rank = 0; rank < ctx.ambient()->size(); ++rank) {
        const Monomial& m = ctx.monomial_at(rank);
        if (m.total_degree() + deg > ctx.degree_bound()) continue;
        slice.push_back(ctx.to_vector(poly_mono_mul(f, m)));
    }
    return ReductionOperator::from_kernel(ctx.ambient(), slice);
}

OperatorFamily family_from_polynomials(const TruncatedContext& ctx,
                                       std::span<const Polynomial> polys,
                                       std::vector<std::string> names) {
    std::vector<ReductionOperator> ops;
    ops.reserve(polys.size());
    for (const Polynomial& f : polys)
        ops.push_back(operator_from_polynomial(ctx, f));
    return OperatorFamily(ctx.ambient(), std::move(ops), std::move(names));
}

bool is_groebner(const TruncatedContext& ctx, std::span<const Polynomial> r) {
    return is_confluent(family_from_polynomials(ctx, r));
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
    const Monomial l = Monomial::lcm(a.leading_key(), b.leading_key());
    Polynomial s = poly_mono_mul(a, *Monomial::quotient(l, a.leading_key()),
                                 1 / a.leading_coeff());
    s.add_scaled(poly_mono_mul(b, *Monomial::quotient(l, b.leading_key()),
                               1 / b.leading_coeff()),
                 -1);
    return s;
}

Polynomial division_remainder(Polynomial p,
                              std::span<const Polynomial> divisors) {
    Polynomial remainder;
    while (!p.is_zero()) {
        const Monomial m = p.leading_key();
        const Rational c = p.leading_coeff();
        bool reduced = false;
        for (const Polynomial& d : divisors) {
            if (auto q = Monomial::quotient(m, d.leading_key())) {
                p.add_scaled(poly_mono_mul(d, *q), -c / d.leading_coeff());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(m, c);
            p.terms.erase(std::prev(p.terms.end()));
        }
    }
    return remainder;
}

GroebnerResult complete_groebner(const TruncatedContext& ctx,
                                 std::span<const Polynomial> input) {
    if (input.empty())
        throw std::invalid_argument("no input polynomials");
    GroebnerResult result;
    result.input_count = static_cast<int>(input.size());
    result.basis.assign(input.begin(), input.end());

    std::vector<ReductionOperator> ops;
    std::optional<ReductionOperator> prefix_meet;
    for (size_t i = 0; i < result.basis.size(); ++i) {
        const Polynomial fi = result.basis[i];  // by value: the list may grow
        ReductionOperator ti = operator_from_polynomial(ctx, fi);
        if (prefix_meet) {
            const ReductionOperator bound = join(*prefix_meet, ti);
            for (size_t j = 0; j < i; ++j) {
                const Monomial ltj = result.basis[j].leading_key();
                const Monomial lti = fi.leading_key();
                if (Monomial::gcd(ltj, lti).is_one())
                    continue;  // disjoint reductions, no critical pair
                const Monomial overlap = Monomial::lcm(ltj, lti);
                if (overlap.total_degree() > ctx.degree_bound()) {
                    result.warnings.push_back(
                        "critical pair (" + std::to_string(j + 1) + "," +
                        std::to_string(i + 1) +
                        ") exceeds the degree bound and was not examined");
                    continue;
                }
                const int overlap_rank = ctx.rank_of(overlap);
                if (bound.reduces(overlap_rank)) {
                    // Lattice criterion: this reduction of f_i is useless.
                    result.useless.push_back(
                        {static_cast<int>(i), *Monomial::quotient(overlap, lti),
                         overlap,
                         ctx.to_polynomial(bound.image_of(overlap_rank))});
                    continue;
                }
                Polynomial s = s_polynomial(result.basis[j], fi);
                Polynomial r = division_remainder(std::move(s), result.basis);
                if (r.is_zero()) continue;
                r.make_monic();
                if (poly_degree(r) >= ctx.degree_bound())
                    result.warnings.push_back(
                        "added polynomial reaches the degree bound; the "
                        "result may be a truncation artifact");
                result.basis.push_back(std::move(r));
            }
            prefix_meet = meet(*prefix_meet, ti);
        } else {
            prefix_meet = ti;
        }
        ops.push_back(std::move(ti));
    }
    result.verified =
        is_confluent(OperatorFamily(ctx.ambient(), std::move(ops)));
    return result;
}

bool verify_syzygy_identity(std::span<const std::pair<Polynomial, int>> lhs,
                            std::span<const std::pair<Polynomial, int>> rhs,
                            std::span<const Polynomial> r) {
    auto combine = [&](std::span<const std::pair<Polynomial, int>> side) {
        Polynomial sum;
        for (const auto& [cofactor, index] : side) {
            if (index < 0 || index >= static_cast<int>(r.size()))
                throw std::invalid_argument("polynomial index out of range");
            sum.add_scaled(poly_mul(cofactor, r[index]), 1);
        }
        return sum;
    };
    return combine(lhs) == combine(rhs);
}

}  // namespace redop

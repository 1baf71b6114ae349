#include "redop/reduction_operator.hpp"

#include <stdexcept>

namespace redop {

ReductionOperator::ReductionOperator(ReducedBasis kernel)
    : kernel_(std::move(kernel)) {
    const auto& rows = kernel_.rows();
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        row_of_.emplace(rows[i].leading_key(), i);
}

ReductionOperator ReductionOperator::identity(BasisPtr basis) {
    return ReductionOperator(ReducedBasis(std::move(basis)));
}

ReductionOperator ReductionOperator::from_kernel(
    BasisPtr basis, std::span<const Vector> spanning) {
    return ReductionOperator(ReducedBasis::reduce(std::move(basis), spanning));
}

ReductionOperator ReductionOperator::from_kernel(ReducedBasis kernel) {
    return ReductionOperator(std::move(kernel));
}

ReductionOperator ReductionOperator::from_action(
    BasisPtr basis, const std::map<int, Vector>& action) {
    std::vector<Row> rows;
    for (const auto& [rank, image] : action) {
        if (rank < 0 || rank >= basis->size())
            throw std::invalid_argument("action key out of range");
        require_same_basis(basis, image.basis());
        if (!image.is_zero() && image.leading_rank() >= rank)
            throw std::invalid_argument(
                "not a reduction operator: T(" + basis->name(rank) +
                ") is not strictly smaller than " + basis->name(rank));
        Row r = image.row();
        r.scale(-1);
        r.add_term(rank, 1);  // g - T(g)
        rows.push_back(std::move(r));
    }
    // Idempotence: images may not involve reducible generators.
    for (const auto& [rank, image] : action)
        for (const auto& [k, c] : image.row().terms)
            if (action.count(k))
                throw std::invalid_argument(
                    "not idempotent: T(" + basis->name(rank) +
                    ") involves the reducible generator " + basis->name(k));
    // Rows are monic with pairwise distinct leading terms, and condition ii
    // follows from idempotence, so this is already the reduced basis.
    return ReductionOperator(ReducedBasis(std::move(basis), std::move(rows)));
}

Vector ReductionOperator::image_of(int rank) const {
    auto it = row_of_.find(rank);
    if (it == row_of_.end()) return Vector::unit(basis(), rank);
    Vector v = Vector::unit(basis(), rank);
    v.add_scaled(kernel_.element(it->second), -1);  // g - e_g
    return v;
}

Vector ReductionOperator::kernel_element_for(int rank) const {
    auto it = row_of_.find(rank);
    if (it == row_of_.end())
        throw std::invalid_argument("generator is not reducible");
    return kernel_.element(it->second);
}

Vector ReductionOperator::apply(const Vector& v) const {
    require_same_basis(basis(), v.basis());
    // T(v) = v - sum over reducible g of v_g * (g - T(g))
    Vector out = v;
    for (const auto& [rank, c] : v.row().terms) {
        auto it = row_of_.find(rank);
        if (it != row_of_.end())
            out.add_scaled(kernel_.element(it->second), -c);
    }
    return out;
}

std::vector<int> ReductionOperator::reducible_ranks() const {
    return kernel_.leading_ranks();
}

std::vector<int> ReductionOperator::normal_form_ranks() const {
    std::vector<int> out;
    for (int g = 0; g < basis()->size(); ++g)
        if (!reduces(g)) out.push_back(g);
    return out;
}

std::map<int, Rational> ReductionOperator::t_decomposition(
    const Vector& v) const {
    require_same_basis(basis(), v.basis());
    std::map<int, Rational> coeffs;
    Vector current = v;
    while (!current.is_zero()) {
        const int g = current.leading_rank();
        auto it = row_of_.find(g);
        if (it == row_of_.end())
            throw std::invalid_argument("not in kernel");
        const Rational c = current.leading_coeff();
        coeffs.emplace(g, c);
        current.add_scaled(kernel_.element(it->second), -c);
    }
    return coeffs;
}

bool ReductionOperator::operator==(const ReductionOperator& other) const {
    return kernel_ == other.kernel_;
}

}  // namespace redop

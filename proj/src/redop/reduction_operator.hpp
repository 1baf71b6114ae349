#pragma once

#include "redop/linear_core.hpp"

#include <map>

namespace redop {

// Idempotent endomorphism T of the basis span with T(g) <= g for every
// generator g. Canonically represented by the reduced basis of its kernel,
// whose elements are exactly g - T(g) for the T-reducible generators g;
// this is the kernel bijection between operators and subspaces.
class ReductionOperator {
public:
    static ReductionOperator identity(BasisPtr basis);
    // ker^{-1}: accepts any spanning set and reduces it first.
    static ReductionOperator from_kernel(BasisPtr basis,
                                         std::span<const Vector> spanning);
    static ReductionOperator from_kernel(ReducedBasis kernel);
    // Builds from an explicit action map reducible generator -> T(g);
    // validates dominance and idempotence, throws std::invalid_argument.
    static ReductionOperator from_action(BasisPtr basis,
                                         const std::map<int, Vector>& action);

    const BasisPtr& basis() const { return kernel_.basis(); }
    const ReducedBasis& kernel() const { return kernel_; }

    bool is_identity() const { return kernel_.dimension() == 0; }
    bool reduces(int rank) const { return row_of_.count(rank) != 0; }

    Vector image_of(int rank) const;  // T(g)
    // g - T(g) for reducible g: the kernel basis element with leading term g.
    Vector kernel_element_for(int rank) const;
    Vector apply(const Vector& v) const;

    std::vector<int> reducible_ranks() const;     // Red(T), ascending
    std::vector<int> normal_form_ranks() const;   // NF(T), ascending

    // Coefficients of the unique decomposition v = sum c_g (g - T(g));
    // throws std::invalid_argument("not in kernel") if v is outside ker(T).
    std::map<int, Rational> t_decomposition(const Vector& v) const;

    bool operator==(const ReductionOperator& other) const;

private:
    explicit ReductionOperator(ReducedBasis kernel);

    ReducedBasis kernel_;
    std::map<int, int> row_of_;  // reducible rank -> kernel row index
};

}  // namespace redop

#include "redop/lattice.hpp"

namespace redop {

bool leq(const ReductionOperator& t1, const ReductionOperator& t2) {
    require_same_basis(t1.basis(), t2.basis());
    for (const Row& r : t2.kernel().rows())
        if (!t1.kernel().contains(Vector(t1.basis(), r))) return false;
    return true;
}

ReductionOperator meet(const ReductionOperator& t1,
                       const ReductionOperator& t2) {
    require_same_basis(t1.basis(), t2.basis());
    return ReductionOperator::from_kernel(
        subspace_sum(t1.kernel(), t2.kernel()));
}

ReductionOperator join(const ReductionOperator& t1,
                       const ReductionOperator& t2) {
    require_same_basis(t1.basis(), t2.basis());
    return ReductionOperator::from_kernel(
        subspace_intersection(t1.kernel(), t2.kernel()));
}

ReductionOperator meet_family(BasisPtr basis,
                              std::span<const ReductionOperator> family) {
    Echelon<Row> e;
    for (const ReductionOperator& t : family) {
        require_same_basis(basis, t.basis());
        for (const Row& r : t.kernel().rows()) e.insert(r);
    }
    return ReductionOperator::from_kernel(ReducedBasis(basis, e.rows()));
}

std::vector<int> family_normal_forms(
    BasisPtr basis, std::span<const ReductionOperator> family) {
    std::vector<int> out;
    for (int g = 0; g < basis->size(); ++g) {
        bool fixed = true;
        for (const ReductionOperator& t : family)
            if (t.reduces(g)) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(g);
    }
    return out;
}

ReductionOperator vee_bar(BasisPtr basis,
                          std::span<const ReductionOperator> family) {
    std::vector<Row> rows;
    for (int g : family_normal_forms(basis, family)) {
        Row r;
        r.set(g, 1);
        rows.push_back(std::move(r));
    }
    return ReductionOperator::from_kernel(
        ReducedBasis(std::move(basis), std::move(rows)));
}

}  // namespace redop

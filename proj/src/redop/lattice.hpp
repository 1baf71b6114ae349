#pragma once

#include "redop/reduction_operator.hpp"

namespace redop {

// Lattice structure on reduction operators under the kernel bijection:
// T1 <= T2 iff ker(T2) is contained in ker(T1); the meet sums kernels, the
// join intersects them.

bool leq(const ReductionOperator& t1, const ReductionOperator& t2);

ReductionOperator meet(const ReductionOperator& t1, const ReductionOperator& t2);
ReductionOperator join(const ReductionOperator& t1, const ReductionOperator& t2);

// Meet of a family; the empty family yields the identity.
ReductionOperator meet_family(BasisPtr basis,
                              std::span<const ReductionOperator> family);

// NF(F): generators fixed by every member of the family, ascending.
std::vector<int> family_normal_forms(BasisPtr basis,
                                     std::span<const ReductionOperator> family);

// The operator whose kernel is the span of NF(F); its reduced basis is just
// the sorted list of normal-form generators themselves.
ReductionOperator vee_bar(BasisPtr basis,
                          std::span<const ReductionOperator> family);

}  // namespace redop

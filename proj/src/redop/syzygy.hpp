#pragma once

#include "redop/lattice.hpp"

#include <compare>

namespace redop {

// Ordered family T_1, ..., T_n of reduction operators over one basis. The
// list order is semantically significant: it drives the prefix meets and the
// position-major well-order on the product space.
class OperatorFamily {
public:
    OperatorFamily(BasisPtr basis, std::vector<ReductionOperator> ops,
                   std::vector<std::string> names = {});

    int size() const { return static_cast<int>(ops_.size()); }
    const ReductionOperator& op(int i) const { return ops_.at(i); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    const BasisPtr& basis() const { return basis_; }
    std::span<const ReductionOperator> ops() const { return ops_; }

private:
    BasisPtr basis_;
    std::vector<ReductionOperator> ops_;
    std::vector<std::string> names_;
};

// Index of the canonical basis element e_{i,g} of ker(T_1) x ... x ker(T_n):
// slot op carries g - T_op(g). op is 0-based; the order is position-major,
// then by generator.
struct ProductIndex {
    int op;
    int gen;
    auto operator<=>(const ProductIndex&) const = default;
};

using ProductRow = SparseRow<ProductIndex>;

ProductRow product_unit(const ProductIndex& idx);

// Sum of the slot contents: sum of coeff * (g - T_i(g)).
Vector pi_f(const OperatorFamily& f, const ProductRow& w);

// Basis of the syzygy space ker(pi_F) held in reduced echelon form with
// respect to the position-major order, ascending leading index.
class SyzygyBasis {
public:
    SyzygyBasis() = default;
    explicit SyzygyBasis(std::vector<ProductRow> reduced_rows);

    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<ProductRow>& rows() const { return rows_; }
    std::vector<ProductIndex> leading_indices() const;

    bool operator==(const SyzygyBasis&) const = default;

private:
    std::vector<ProductRow> rows_;
};

// The unique preimage of v under pi whose support avoids the leading indices
// of the prefix family's syzygies. `prefix_syzygies` must be the syzygy basis
// of `prefix`. Throws std::invalid_argument("not in combined kernel") when v
// is outside ker(T_1) + ... + ker(T_k).
ProductRow canonical_decomposition(const OperatorFamily& prefix,
                                   const SyzygyBasis& prefix_syzygies,
                                   const Vector& v);

// The inductive basis construction: for each step i >= 2 and each generator
// g0 reducible for (T_1 ^ ... ^ T_{i-1}) v T_i, combine the T_i-decomposition
// and the canonical prefix decomposition of g0 - ((U v T_i)(g0)) into one
// syzygy with leading index (i, g0).
SyzygyBasis syzygy_basis(const OperatorFamily& f);

// The leading indices of the syzygy space, computed from prefix meets and
// joins only (no decompositions).
std::vector<ProductIndex> syzygy_leading_indices(const OperatorFamily& f);

// Independent route: direct elimination on the coordinate matrix of pi_F
// over the e_{i,g} basis. Spans the same space as syzygy_basis.
SyzygyBasis nullspace_oracle(const OperatorFamily& f);

}  // namespace redop

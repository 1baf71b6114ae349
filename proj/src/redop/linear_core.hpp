#pragma once

#include "redop/sparse_row.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace redop {

// A finite totally ordered set of generators; rank = position, a later
// position is greater.
class OrderedBasis {
public:
    explicit OrderedBasis(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int rank) const { return names_.at(rank); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> rank_of(const std::string& name) const;

    bool operator==(const OrderedBasis& other) const {
        return names_ == other.names_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> rank_;
};

using BasisPtr = std::shared_ptr<const OrderedBasis>;

BasisPtr make_basis(std::vector<std::string> names);

using Row = SparseRow<int>;  // coordinates keyed by generator rank

// Element of the span of an OrderedBasis.
class Vector {
public:
    Vector() = default;
    explicit Vector(BasisPtr basis) : basis_(std::move(basis)) {}
    Vector(BasisPtr basis, Row row);
    static Vector unit(BasisPtr basis, int rank);

    const BasisPtr& basis() const { return basis_; }
    const Row& row() const { return row_; }
    bool is_zero() const { return row_.is_zero(); }

    int leading_rank() const;  // throws on the zero vector
    const std::string& leading_term() const;
    const Rational& leading_coeff() const;
    Rational coeff(int rank) const { return row_.coeff(rank); }

    void set(int rank, const Rational& c);
    Vector& add_scaled(const Vector& other, const Rational& c);
    Vector& scale(const Rational& c);
    Vector& negate() { return scale(-1); }

    std::string to_string() const;
    bool operator==(const Vector& other) const;

private:
    void check_rank(int rank) const;

    BasisPtr basis_;
    Row row_;
};

void require_same_basis(const BasisPtr& a, const BasisPtr& b);

// The unique reduced basis of a subspace: elements monic, sorted by strictly
// increasing leading term, and no element's leading term occurs in another
// element's support. The zero subspace is the empty list.
class ReducedBasis {
public:
    ReducedBasis() = default;
    explicit ReducedBasis(BasisPtr basis) : basis_(std::move(basis)) {}
    ReducedBasis(BasisPtr basis, std::vector<Row> reduced_rows);

    // Ordered Gaussian elimination of any spanning set (greatest-generator
    // pivots, full back-substitution).
    static ReducedBasis reduce(BasisPtr basis, std::span<const Vector> spanning);

    const BasisPtr& basis() const { return basis_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }
    Vector element(int i) const { return Vector(basis_, rows_.at(i)); }
    std::vector<Vector> elements() const;
    std::vector<int> leading_ranks() const;

    bool contains(const Vector& v) const;
    // Coefficients expressing v over this basis; nullopt if not a member.
    std::optional<std::vector<Rational>> coordinates(const Vector& v) const;

    bool operator==(const ReducedBasis& other) const;

private:
    BasisPtr basis_;
    std::vector<Row> rows_;
};

ReducedBasis subspace_sum(const ReducedBasis& a, const ReducedBasis& b);
ReducedBasis subspace_intersection(const ReducedBasis& a, const ReducedBasis& b);

// Verbatim check of the two reduced-basis conditions plus sortedness;
// used by validation and tests.
bool is_reduced_basis(std::span<const Row> rows);

}  // namespace redop

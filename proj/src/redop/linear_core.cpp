#include "redop/linear_core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace redop {

OrderedBasis::OrderedBasis(std::vector<std::string> names)
    : names_(std::move(names)) {
    if (names_.empty())
        throw std::invalid_argument("ordered basis must be non-empty");
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("empty generator name");
        if (!rank_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate generator name '" +
                                        names_[i] + "'");
    }
}

std::optional<int> OrderedBasis::rank_of(const std::string& name) const {
    auto it = rank_.find(name);
    if (it == rank_.end()) return std::nullopt;
    return it->second;
}

BasisPtr make_basis(std::vector<std::string> names) {
    return std::make_shared<const OrderedBasis>(std::move(names));
}

void require_same_basis(const BasisPtr& a, const BasisPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b))
        throw std::invalid_argument("operands use different ordered bases");
}

Vector::Vector(BasisPtr basis, Row row)
    : basis_(std::move(basis)), row_(std::move(row)) {
    if (!row_.is_zero()) {
        check_rank(row_.terms.begin()->first);
        check_rank(row_.leading_key());
    }
}

Vector Vector::unit(BasisPtr basis, int rank) {
    Vector v(std::move(basis));
    v.set(rank, 1);
    return v;
}

void Vector::check_rank(int rank) const {
    if (!basis_ || rank < 0 || rank >= basis_->size())
        throw std::invalid_argument("generator rank out of range");
}

int Vector::leading_rank() const {
    if (is_zero()) throw std::invalid_argument("no leading term of zero");
    return row_.leading_key();
}

const std::string& Vector::leading_term() const {
    return basis_->name(leading_rank());
}

const Rational& Vector::leading_coeff() const {
    if (is_zero()) throw std::invalid_argument("no leading term of zero");
    return row_.leading_coeff();
}

void Vector::set(int rank, const Rational& c) {
    check_rank(rank);
    row_.set(rank, c);
}

Vector& Vector::add_scaled(const Vector& other, const Rational& c) {
    require_same_basis(basis_, other.basis_);
    row_.add_scaled(other.row_, c);
    return *this;
}

Vector& Vector::scale(const Rational& c) {
    row_.scale(c);
    return *this;
}

std::string Vector::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest term first
    for (auto it = row_.terms.rbegin(); it != row_.terms.rend(); ++it) {
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
        if (c != 1) out << redop::to_string(c) << "*";
        out << basis_->name(it->first);
        first = false;
    }
    return out.str();
}

bool Vector::operator==(const Vector& other) const {
    require_same_basis(basis_, other.basis_);
    return row_ == other.row_;
}

ReducedBasis::ReducedBasis(BasisPtr basis, std::vector<Row> reduced_rows)
    : basis_(std::move(basis)), rows_(std::move(reduced_rows)) {
    if (!is_reduced_basis(rows_))
        throw std::invalid_argument("rows do not form a reduced basis");
}

ReducedBasis ReducedBasis::reduce(BasisPtr basis,
                                  std::span<const Vector> spanning) {
    Echelon<Row> e;
    for (const Vector& v : spanning) {
        require_same_basis(basis, v.basis());
        e.insert(v.row());
    }
    ReducedBasis out(std::move(basis));
    out.rows_ = e.rows();
    return out;
}

std::vector<Vector> ReducedBasis::elements() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const Row& r : rows_) out.emplace_back(basis_, r);
    return out;
}

std::vector<int> ReducedBasis::leading_ranks() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const Row& r : rows_) out.push_back(r.leading_key());
    return out;
}

bool ReducedBasis::contains(const Vector& v) const {
    require_same_basis(basis_, v.basis());
    return normal_form_modulo(v.row(), rows_).is_zero();
}

std::optional<std::vector<Rational>> ReducedBasis::coordinates(
    const Vector& v) const {
    require_same_basis(basis_, v.basis());
    return express_over(v.row(), rows_);
}

bool ReducedBasis::operator==(const ReducedBasis& other) const {
    require_same_basis(basis_, other.basis_);
    return rows_ == other.rows_;
}

ReducedBasis subspace_sum(const ReducedBasis& a, const ReducedBasis& b) {
    require_same_basis(a.basis(), b.basis());
    Echelon<Row> e;
    for (const Row& r : a.rows()) e.insert(r);
    for (const Row& r : b.rows()) e.insert(r);
    return ReducedBasis(a.basis(), e.rows());
}

// Zassenhaus: eliminate rows (v|v) for v in A and (w|0) for w in B, pivoting
// on the left block; a row whose left block dies carries an element of the
// intersection in its right block.
ReducedBasis subspace_intersection(const ReducedBasis& a,
                                   const ReducedBasis& b) {
    require_same_basis(a.basis(), b.basis());
    Echelon<AugmentedRow<int, int>> e;
    std::vector<Row> residues;
    auto feed = [&](const Row& r, bool mirror) {
        AugmentedRow<int, int> row;
        row.main = r;
        if (mirror) row.aux = r;
        if (auto dead = e.insert(std::move(row)); dead && !dead->aux.is_zero())
            residues.push_back(std::move(dead->aux));
    };
    for (const Row& r : a.rows()) feed(r, true);
    for (const Row& r : b.rows()) feed(r, false);
    return ReducedBasis(a.basis(), reduced_echelon(std::move(residues)));
}

bool is_reduced_basis(std::span<const Row> rows) {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].is_zero()) return false;
        if (rows[i].leading_coeff() != 1) return false;  // condition i
        if (i > 0 && !(rows[i - 1].leading_key() < rows[i].leading_key()))
            return false;
        for (size_t j = 0; j < rows.size(); ++j) {  // condition ii
            if (i == j) continue;
            if (rows[i].coeff(rows[j].leading_key()) != 0) return false;
        }
    }
    return true;
}

}  // namespace redop

#pragma once

#include "redop/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace redop {

// Sparse linear combination over a totally ordered key set. No zero
// coefficients are stored; the greatest key present is the leading key.
template <class Key>
struct SparseRow {
    using key_type = Key;

    std::map<Key, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    const Key& leading_key() const { return terms.rbegin()->first; }
    const Rational& leading_coeff() const { return terms.rbegin()->second; }
    const std::map<Key, Rational>& main_terms() const { return terms; }

    Rational coeff(const Key& k) const {
        auto it = terms.find(k);
        return it == terms.end() ? Rational(0) : it->second;
    }

    void set(const Key& k, const Rational& c) {
        if (c == 0)
            terms.erase(k);
        else
            terms[k] = c;
    }

    void add_term(const Key& k, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    // *this += c * other
    void add_scaled(const SparseRow& other, const Rational& c) {
        if (c == 0) return;
        for (const auto& [k, v] : other.terms) add_term(k, v * c);
    }

    void scale(const Rational& c) {
        if (c == 0) {
            terms.clear();
            return;
        }
        for (auto& [k, v] : terms) v *= c;
    }

    void make_monic() {
        if (!is_zero() && leading_coeff() != 1) scale(1 / leading_coeff());
    }

    bool operator==(const SparseRow&) const = default;
};

// Row of a block elimination: row operations act on both parts, pivoting is
// on `main` only. Once `main` vanishes, `aux` holds the combination of the
// original aux tags that produced the cancellation.
template <class MainKey, class AuxKey>
struct AugmentedRow {
    using key_type = MainKey;

    SparseRow<MainKey> main;
    SparseRow<AuxKey> aux;

    bool is_zero() const { return main.is_zero(); }
    const MainKey& leading_key() const { return main.leading_key(); }
    const Rational& leading_coeff() const { return main.leading_coeff(); }
    Rational coeff(const MainKey& k) const { return main.coeff(k); }
    const std::map<MainKey, Rational>& main_terms() const { return main.terms; }

    void add_scaled(const AugmentedRow& other, const Rational& c) {
        main.add_scaled(other.main, c);
        aux.add_scaled(other.aux, c);
    }
    void scale(const Rational& c) {
        main.scale(c);
        aux.scale(c);
    }
};

// Incremental Gaussian elimination keeping the unique reduced form of the
// span: pivot rows are monic, pivots are the rows' greatest keys, and no
// pivot key occurs in any other row's support. Pivoting is on the greatest
// key, so for rows over an ordered generator set the pivot of a row is its
// leading term.
template <class Row>
class Echelon {
public:
    using Key = typename Row::key_type;

    // Fully reduces `row` against the current pivots. If the row vanishes it
    // is returned (for AugmentedRow the aux part carries the certificate);
    // otherwise it is installed as a new pivot row and std::nullopt returned.
    std::optional<Row> insert(Row row) {
        reduce(row);
        if (row.is_zero()) return row;
        row.scale(1 / row.leading_coeff());
        const Key lead = row.leading_key();
        for (auto& [k, pivot] : pivots_) {
            const Rational c = pivot.coeff(lead);
            if (c != 0) pivot.add_scaled(row, -c);
        }
        pivots_.emplace(lead, std::move(row));
        return std::nullopt;
    }

    // Eliminates every pivot key from `row` (one descending sweep; a
    // subtraction only introduces keys below the pivot just cleared).
    void reduce(Row& row) const {
        std::optional<Key> bound;
        for (;;) {
            auto it = bound ? std::make_reverse_iterator(
                                  row.main_terms().lower_bound(*bound))
                            : row.main_terms().rbegin();
            bool hit = false;
            for (; it != row.main_terms().rend(); ++it) {
                auto p = pivots_.find(it->first);
                if (p != pivots_.end()) {
                    bound = it->first;
                    row.add_scaled(p->second, -it->second);
                    hit = true;
                    break;
                }
            }
            if (!hit) break;
        }
    }

    bool has_pivot(const Key& k) const { return pivots_.count(k) != 0; }
    const Row* pivot(const Key& k) const {
        auto it = pivots_.find(k);
        return it == pivots_.end() ? nullptr : &it->second;
    }
    size_t size() const { return pivots_.size(); }

    std::vector<Row> rows() const {
        std::vector<Row> out;
        out.reserve(pivots_.size());
        for (const auto& [k, row] : pivots_) out.push_back(row);
        return out;
    }

private:
    std::map<Key, Row> pivots_;
};

// Unique reduced basis of the span of `rows`, sorted by increasing leading key.
template <class Row>
std::vector<Row> reduced_echelon(std::vector<Row> rows) {
    Echelon<Row> e;
    for (auto& r : rows) e.insert(std::move(r));
    return e.rows();
}

// Remainder of `row` modulo a reduced basis: every occurrence of a basis
// element's leading key is cleared. A single pass suffices because no basis
// element's support contains another's leading key.
template <class Key>
SparseRow<Key> normal_form_modulo(SparseRow<Key> row,
                                  const std::vector<SparseRow<Key>>& basis) {
    for (const auto& b : basis) {
        const Rational c = row.coeff(b.leading_key());
        if (c != 0) row.add_scaled(b, -c / b.leading_coeff());
    }
    return row;
}

// Coefficients of `row` over a reduced basis, std::nullopt if not in the span.
template <class Key>
std::optional<std::vector<Rational>> express_over(
    SparseRow<Key> row, const std::vector<SparseRow<Key>>& basis) {
    std::vector<Rational> coeffs;
    coeffs.reserve(basis.size());
    for (const auto& b : basis) {
        const Rational c = row.coeff(b.leading_key()) / b.leading_coeff();
        if (c != 0) row.add_scaled(b, -c);
        coeffs.push_back(c);
    }
    if (!row.is_zero()) return std::nullopt;
    return coeffs;
}

}  // namespace redop

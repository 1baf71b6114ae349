#include "redop/syzygy.hpp"

#include <stdexcept>

namespace redop {

OperatorFamily::OperatorFamily(BasisPtr basis,
                               std::vector<ReductionOperator> ops,
                               std::vector<std::string> names)
    : basis_(std::move(basis)), ops_(std::move(ops)), names_(std::move(names)) {
    if (ops_.empty())
        throw std::invalid_argument("operator family must be non-empty");
    for (const ReductionOperator& t : ops_)
        require_same_basis(basis_, t.basis());
    if (names_.empty()) {
        names_.reserve(ops_.size());
        for (size_t i = 0; i < ops_.size(); ++i)
            names_.push_back("T" + std::to_string(i + 1));
    }
    if (names_.size() != ops_.size())
        throw std::invalid_argument("operator name list length mismatch");
    std::map<std::string, int> seen;
    for (const std::string& n : names_)
        if (!seen.emplace(n, 0).second)
            throw std::invalid_argument("duplicate operator name '" + n + "'");
}

ProductRow product_unit(const ProductIndex& idx) {
    ProductRow r;
    r.set(idx, 1);
    return r;
}

Vector pi_f(const OperatorFamily& f, const ProductRow& w) {
    Vector out(f.basis());
    for (const auto& [idx, c] : w.terms) {
        if (idx.op < 0 || idx.op >= f.size())
            throw std::invalid_argument("product index out of range");
        out.add_scaled(f.op(idx.op).kernel_element_for(idx.gen), c);
    }
    return out;
}

SyzygyBasis::SyzygyBasis(std::vector<ProductRow> reduced_rows)
    : rows_(std::move(reduced_rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].is_zero() || rows_[i].leading_coeff() != 1)
            throw std::invalid_argument("syzygy basis rows must be monic");
        if (i > 0 && !(rows_[i - 1].leading_key() < rows_[i].leading_key()))
            throw std::invalid_argument("syzygy basis rows must be sorted");
    }
}

std::vector<ProductIndex> SyzygyBasis::leading_indices() const {
    std::vector<ProductIndex> out;
    out.reserve(rows_.size());
    for (const ProductRow& r : rows_) out.push_back(r.leading_key());
    return out;
}

namespace {

using TaggedRow = AugmentedRow<int, ProductIndex>;

// Reduced basis of ker(T_1) + ... + ker(T_k) in which every element carries a
// certificate: a product-space combination mapping onto it under pi.
class TaggedKernel {
public:
    void add_operator(const OperatorFamily& f, int i) {
        const auto& kernel = f.op(i).kernel();
        for (const Row& r : kernel.rows()) {
            TaggedRow row;
            row.main = r;
            row.aux = product_unit({i, r.leading_key()});
            echelon_.insert(std::move(row));
        }
    }

    // Some preimage of v under pi, obtained by stripping leading terms
    // against the certified kernel basis. nullopt if v is not in the sum.
    std::optional<ProductRow> decompose(const Vector& v) const {
        Row current = v.row();
        ProductRow out;
        while (!current.is_zero()) {
            const TaggedRow* pivot = echelon_.pivot(current.leading_key());
            if (!pivot) return std::nullopt;
            const Rational c = current.leading_coeff();
            out.add_scaled(pivot->aux, c);
            current.add_scaled(pivot->main, -c);
        }
        return out;
    }

private:
    Echelon<TaggedRow> echelon_;
};

}  // namespace

ProductRow canonical_decomposition(const OperatorFamily& prefix,
                                   const SyzygyBasis& prefix_syzygies,
                                   const Vector& v) {
    require_same_basis(prefix.basis(), v.basis());
    TaggedKernel kernel;
    for (int i = 0; i < prefix.size(); ++i) kernel.add_operator(prefix, i);
    auto some = kernel.decompose(v);
    if (!some) throw std::invalid_argument("not in combined kernel");
    return normal_form_modulo(std::move(*some), prefix_syzygies.rows());
}

SyzygyBasis syzygy_basis(const OperatorFamily& f) {
    Echelon<ProductRow> syzygies;
    TaggedKernel prefix_kernel;
    ReductionOperator prefix_meet = f.op(0);
    prefix_kernel.add_operator(f, 0);

    for (int i = 1; i < f.size(); ++i) {
        const ReductionOperator bound = join(prefix_meet, f.op(i));
        std::vector<ProductRow> emitted;
        for (int g0 : bound.reducible_ranks()) {
            const Vector v = bound.kernel_element_for(g0);  // g0 - (U v T_i)(g0)
            auto some = prefix_kernel.decompose(v);
            if (!some)
                throw std::logic_error(
                    "internal invariant violated: join kernel element outside "
                    "the prefix kernel sum");
            ProductRow canonical = *std::move(some);
            syzygies.reduce(canonical);  // support now avoids lt(Syz(prefix))
            ProductRow s;
            for (const auto& [g, c] : f.op(i).t_decomposition(v))
                s.set({i, g}, c);
            s.add_scaled(canonical, -1);
            emitted.push_back(std::move(s));
        }
        for (ProductRow& s : emitted) syzygies.insert(std::move(s));
        prefix_meet = meet(prefix_meet, f.op(i));
        prefix_kernel.add_operator(f, i);
    }
    return SyzygyBasis(syzygies.rows());
}

std::vector<ProductIndex> syzygy_leading_indices(const OperatorFamily& f) {
    std::vector<ProductIndex> out;
    ReductionOperator prefix_meet = f.op(0);
    for (int i = 1; i < f.size(); ++i) {
        const ReductionOperator bound = join(prefix_meet, f.op(i));
        for (int g0 : bound.reducible_ranks()) out.push_back({i, g0});
        prefix_meet = meet(prefix_meet, f.op(i));
    }
    return out;
}

SyzygyBasis nullspace_oracle(const OperatorFamily& f) {
    Echelon<TaggedRow> e;
    std::vector<ProductRow> found;
    for (int i = 0; i < f.size(); ++i) {
        for (const Row& r : f.op(i).kernel().rows()) {
            TaggedRow row;
            row.main = r;
            row.aux = product_unit({i, r.leading_key()});
            if (auto dead = e.insert(std::move(row)))
                found.push_back(std::move(dead->aux));
        }
    }
    return SyzygyBasis(reduced_echelon(std::move(found)));
}

}  // namespace redop

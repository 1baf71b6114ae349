#include "redop/completion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace redop {

std::vector<int> obstruction_set(const OperatorFamily& f) {
    const ReductionOperator bottom = meet_family(f.basis(), f.ops());
    std::vector<int> out;
    for (int g : family_normal_forms(f.basis(), f.ops()))
        if (bottom.reduces(g)) out.push_back(g);
    return out;
}

bool is_confluent(const OperatorFamily& f) { return obstruction_set(f).empty(); }

ReductionOperator completing_operator(const OperatorFamily& f) {
    return join(meet_family(f.basis(), f.ops()), vee_bar(f.basis(), f.ops()));
}

OperatorFamily reduce_family(const OperatorFamily& f) {
    std::set<ProductIndex> removed;
    for (const ProductIndex& idx : syzygy_leading_indices(f))
        removed.insert(idx);
    std::vector<ReductionOperator> reduced;
    reduced.reserve(f.size());
    for (int i = 0; i < f.size(); ++i) {
        std::vector<Row> kept;
        for (const Row& r : f.op(i).kernel().rows())
            if (!removed.count({i, r.leading_key()})) kept.push_back(r);
        // A sublist of a reduced basis is still reduced.
        reduced.push_back(ReductionOperator::from_kernel(
            ReducedBasis(f.basis(), std::move(kept))));
    }
    return OperatorFamily(f.basis(), std::move(reduced), f.names());
}

std::vector<ReductionOperator> incremental_completion(const OperatorFamily& f) {
    std::vector<ReductionOperator> stage = {f.op(0)};
    std::vector<ReductionOperator> added;
    for (int i = 1; i < f.size(); ++i) {
        stage.push_back(f.op(i));
        ReductionOperator c =
            completing_operator(OperatorFamily(f.basis(), stage));
        if (!c.is_identity()) {
            stage.push_back(c);
            added.push_back(std::move(c));
        }
    }
    return added;
}

bool verify_completion(const OperatorFamily& f,
                       std::span<const ReductionOperator> c) {
    for (int g : obstruction_set(f)) {
        bool covered = false;
        for (const ReductionOperator& t : c)
            if (t.reduces(g)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return leq(meet_family(f.basis(), f.ops()), meet_family(f.basis(), c));
}

std::vector<Ambiguity> ambiguities(const OperatorFamily& f) {
    std::vector<Ambiguity> out;
    for (int g = 0; g < f.basis()->size(); ++g)
        for (int i = 0; i < f.size(); ++i) {
            if (!f.op(i).reduces(g)) continue;
            for (int j = i + 1; j < f.size(); ++j)
                if (f.op(j).reduces(g)) out.push_back({g, i, j});
        }
    return out;
}

CompletionReport complete_with_report(const OperatorFamily& f) {
    CompletionReport report;
    report.obstructions = obstruction_set(f);
    report.removed_reductions = syzygy_leading_indices(f);
    report.added = incremental_completion(reduce_family(f));
    report.is_confluent_after = verify_completion(f, report.added);
    if (!report.is_confluent_after)
        throw std::logic_error("Theorem postcondition violated");
    report.ambiguity_list = ambiguities(f);
    return report;
}

}  // namespace redop

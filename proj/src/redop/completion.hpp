#pragma once

#include "redop/syzygy.hpp"

namespace redop {

// Generators witnessing non-confluence: NF(F) minus NF(^F). Empty iff the
// family is confluent.
std::vector<int> obstruction_set(const OperatorFamily& f);

bool is_confluent(const OperatorFamily& f);

// meet(F) joined with the operator whose kernel is spanned by NF(F); the
// single operator whose addition completes F.
ReductionOperator completing_operator(const OperatorFamily& f);

// F with the reductions at syzygy leading indices disabled; preserves the
// meet and can only enlarge normal-form sets.
OperatorFamily reduce_family(const OperatorFamily& f);

// C_i = C^{F_{i-1} union {T_i}} for i = 2..n, keeping only the non-identity
// completing operators.
std::vector<ReductionOperator> incremental_completion(const OperatorFamily& f);

// Characterisation of completion: Obs(F) is covered by the reducible sets of
// C and ^F <= ^C.
bool verify_completion(const OperatorFamily& f,
                       std::span<const ReductionOperator> c);

// A triple (g, T, T') of two distinct operators both reducing g; the possible
// sources of non-confluence.
struct Ambiguity {
    int generator;
    int op1;
    int op2;
    bool operator==(const Ambiguity&) const = default;
};

std::vector<Ambiguity> ambiguities(const OperatorFamily& f);

struct CompletionReport {
    std::vector<int> obstructions;               // Obs(F)
    std::vector<ProductIndex> removed_reductions;  // syzygy leading indices
    std::vector<ReductionOperator> added;          // non-identity completions
    bool is_confluent_after = false;
    std::vector<Ambiguity> ambiguity_list;
};

// Runs the useless-reduction pipeline: reduce F, complete the reduction
// incrementally, and verify that the additions complete the original family.
CompletionReport complete_with_report(const OperatorFamily& f);

}  // namespace redop

#include "test_support.hpp"

#include <doctest.h>

using namespace redop;
using namespace redop::testing;

namespace {

OperatorFamily extend(const OperatorFamily& f,
                      std::span<const ReductionOperator> extra) {
    std::vector<ReductionOperator> ops(f.ops().begin(), f.ops().end());
    ops.insert(ops.end(), extra.begin(), extra.end());
    return OperatorFamily(f.basis(), std::move(ops));
}

}  // namespace

TEST_SUITE("completion") {

TEST_CASE("obstruction set of the worked example is {g2}") {
    OperatorFamily f = illustration_family();
    CHECK(obstruction_set(f) == std::vector<int>{1});
    CHECK(!is_confluent(f));

    OperatorFamily single(f.basis(), {f.op(0)});
    CHECK(obstruction_set(single).empty());

    std::vector<ReductionOperator> c = {completing_operator(f)};
    CHECK(obstruction_set(extend(f, c)).empty());
}

TEST_CASE("completing operator rewrites g2 onto g1") {
    OperatorFamily f = illustration_family();
    BasisPtr b = f.basis();
    ReductionOperator c = completing_operator(f);
    REQUIRE(c.kernel().dimension() == 1);
    CHECK(c.kernel().element(0) == vec(b, {{1, 1}, {0, -1}}));

    OperatorFamily single(b, {f.op(0)});
    CHECK(completing_operator(single).is_identity());

    std::vector<ReductionOperator> cs = {c};
    CHECK(completing_operator(extend(f, cs)).is_identity());
}

TEST_CASE("reduce_family disables exactly the syzygy leading reductions") {
    OperatorFamily f = illustration_family();
    BasisPtr b = f.basis();
    OperatorFamily reduced = reduce_family(f);
    REQUIRE(reduced.size() == 5);
    CHECK(reduced.op(0) == f.op(0));
    // T2 keeps g3 -> g2 but g5 becomes a normal form
    CHECK(reduced.op(1).reducible_ranks() == std::vector<int>{2});
    CHECK(reduced.op(1).image_of(2) == vec(b, {{1, 1}}));
    CHECK(reduced.op(2) == f.op(2));
    CHECK(reduced.op(3) == f.op(3));
    CHECK(reduced.op(4).is_identity());
}

TEST_CASE("reduce_family keeps confluent singletons and kills duplicates") {
    BasisPtr b = g_basis(4);
    std::mt19937_64 rng(99);
    ReductionOperator t = random_operator(rng, b);
    OperatorFamily single(b, {t});
    OperatorFamily rsingle = reduce_family(single);
    CHECK(rsingle.op(0) == t);

    OperatorFamily doubled(b, {t, t});
    OperatorFamily rdoubled = reduce_family(doubled);
    CHECK(rdoubled.op(0) == t);
    CHECK(rdoubled.op(1).is_identity());
}

TEST_CASE("incremental completion of the reduced worked example") {
    OperatorFamily f = illustration_family();
    BasisPtr b = f.basis();
    std::vector<ReductionOperator> added =
        incremental_completion(reduce_family(f));
    REQUIRE(added.size() == 1);
    REQUIRE(added[0].kernel().dimension() == 1);
    CHECK(added[0].kernel().element(0) == vec(b, {{1, 1}, {0, -1}}));
    CHECK(verify_completion(f, added));

    OperatorFamily single(b, {f.op(0)});
    CHECK(incremental_completion(single).empty());

    std::vector<ReductionOperator> cs = {completing_operator(f)};
    OperatorFamily confluent = extend(f, cs);
    CHECK(incremental_completion(confluent).empty());
}

TEST_CASE("verify_completion implements the characterisation") {
    OperatorFamily f = illustration_family();
    std::vector<ReductionOperator> good = {completing_operator(f)};
    CHECK(verify_completion(f, good));
    CHECK(!verify_completion(f, {}));
    std::vector<ReductionOperator> useless_id = {
        ReductionOperator::identity(f.basis())};
    CHECK(!verify_completion(f, useless_id));
}

TEST_CASE("complete_with_report on the worked example") {
    OperatorFamily f = illustration_family();
    BasisPtr b = f.basis();
    CompletionReport report = complete_with_report(f);
    CHECK(report.obstructions == std::vector<int>{1});
    CHECK(report.removed_reductions ==
          std::vector<ProductIndex>{{1, 4}, {4, 3}});
    REQUIRE(report.added.size() == 1);
    CHECK(report.added[0].kernel().element(0) == vec(b, {{1, 1}, {0, -1}}));
    CHECK(report.is_confluent_after);
    // ambiguities: (g5, T1, T2), (g5, T1, T3), (g5, T2, T3), (g4, T4, T5)
    CHECK(report.ambiguity_list ==
          std::vector<Ambiguity>{{3, 3, 4}, {4, 0, 1}, {4, 0, 2}, {4, 1, 2}});

    OperatorFamily single(b, {f.op(0)});
    CompletionReport empty = complete_with_report(single);
    CHECK(empty.obstructions.empty());
    CHECK(empty.removed_reductions.empty());
    CHECK(empty.added.empty());
    CHECK(empty.is_confluent_after);
}

TEST_CASE("reduction preserves the meet and enlarges normal forms" *
          doctest::timeout(60)) {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 150; ++trial) {
        OperatorFamily f = random_family(rng);
        OperatorFamily reduced = reduce_family(f);
        CHECK(meet_family(f.basis(), f.ops()) ==
              meet_family(f.basis(), reduced.ops()));
        for (int i = 0; i < f.size(); ++i)
            for (int g : reduced.op(i).reducible_ranks())
                CHECK(f.op(i).reduces(g));
        // hence obstructions only grow
        const auto obs = obstruction_set(f);
        const auto obs_reduced = obstruction_set(reduced);
        for (int g : obs)
            CHECK(std::find(obs_reduced.begin(), obs_reduced.end(), g) !=
                  obs_reduced.end());
    }
}

TEST_CASE("the completing operator completes, and the pipeline verifies" *
          doctest::timeout(120)) {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 150; ++trial) {
        OperatorFamily f = random_family(rng);

        std::vector<ReductionOperator> c = {completing_operator(f)};
        OperatorFamily completed = extend(f, c);
        CHECK(obstruction_set(completed).empty());
        CHECK(meet_family(f.basis(), completed.ops()) ==
              meet_family(f.basis(), f.ops()));

        CHECK(verify_completion(f, incremental_completion(reduce_family(f))));
    }
}

TEST_CASE("verify_completion agrees with the direct confluence check" *
          doctest::timeout(60)) {
    std::mt19937_64 rng(141421);
    for (int trial = 0; trial < 150; ++trial) {
        OperatorFamily f = random_family(rng);
        std::vector<ReductionOperator> c;
        const int k = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int i = 0; i < k; ++i)
            c.push_back(random_operator(rng, f.basis()));
        if (std::uniform_int_distribution<int>(0, 1)(rng))
            c.push_back(completing_operator(f));

        bool direct = true;
        OperatorFamily joint = extend(f, c);
        if (!obstruction_set(joint).empty()) direct = false;
        if (!(meet_family(f.basis(), joint.ops()) ==
              meet_family(f.basis(), f.ops())))
            direct = false;
        CHECK(verify_completion(f, c) == direct);
    }
}

}  // TEST_SUITE

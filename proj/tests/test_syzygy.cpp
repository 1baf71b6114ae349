#include "test_support.hpp"

#include <doctest.h>

using namespace redop;
using namespace redop::testing;

namespace {

ProductRow prow(std::initializer_list<std::pair<ProductIndex, int>> terms) {
    ProductRow r;
    for (const auto& [idx, c] : terms) r.set(idx, c);
    return r;
}

// the worked example's shorthand e1..e6 over operator positions 0..4
const ProductIndex e1{0, 4};  // slot T1, g5
const ProductIndex e2{1, 2};  // slot T2, g3
const ProductIndex e3{1, 4};  // slot T2, g5
const ProductIndex e4{2, 4};  // slot T3, g5
const ProductIndex e5{3, 3};  // slot T4, g4
const ProductIndex e6{4, 3};  // slot T5, g4

}  // namespace

TEST_SUITE("syzygy") {

TEST_CASE("pi sums the slot contents") {
    OperatorFamily f = illustration_family();
    BasisPtr b = f.basis();
    CHECK(pi_f(f, product_unit(e1)) == vec(b, {{4, 1}, {2, -1}}));
    CHECK(pi_f(f, ProductRow{}) == Vector(b));
    CHECK(pi_f(f, prow({{e3, 1}, {e2, -1}, {e1, -1}})) == Vector(b));
    CHECK_THROWS_AS(pi_f(f, product_unit({0, 2})), std::invalid_argument);
}

TEST_CASE("canonical decomposition of the worked example") {
    OperatorFamily f = illustration_family();
    BasisPtr b = f.basis();

    OperatorFamily prefix1(b, {f.op(0)});
    SyzygyBasis none;
    CHECK(canonical_decomposition(prefix1, none, vec(b, {{4, 1}, {2, -1}})) ==
          prow({{e1, 1}}));
    CHECK(canonical_decomposition(prefix1, none, Vector(b)) == ProductRow{});
    CHECK_THROWS_WITH_AS(
        canonical_decomposition(prefix1, none, vec(b, {{1, 1}, {0, -1}})),
        "not in combined kernel", std::invalid_argument);

    OperatorFamily prefix4(b, {f.op(0), f.op(1), f.op(2), f.op(3)});
    SyzygyBasis syz4 = syzygy_basis(prefix4);
    // g4 - g1 = (g4 - T4(g4)) - (g5 - T1(g5)) + (g5 - T3(g5))
    CHECK(canonical_decomposition(prefix4, syz4, vec(b, {{3, 1}, {0, -1}})) ==
          prow({{e5, 1}, {e1, -1}, {e4, 1}}));
}

TEST_CASE("syzygy basis of the worked example has the two stated elements") {
    OperatorFamily f = illustration_family();
    SyzygyBasis basis = syzygy_basis(f);
    REQUIRE(basis.dimension() == 2);
    CHECK(basis.rows()[0] == prow({{e3, 1}, {e2, -1}, {e1, -1}}));
    CHECK(basis.rows()[1] == prow({{e6, 1}, {e5, -1}, {e4, -1}, {e1, 1}}));
    CHECK(basis.leading_indices() == std::vector<ProductIndex>{e3, e6});
}

TEST_CASE("single-operator families have no syzygies") {
    BasisPtr b = g_basis(4);
    std::mt19937_64 rng(5);
    OperatorFamily f(b, {random_operator(rng, b)});
    CHECK(syzygy_basis(f).dimension() == 0);
    CHECK(syzygy_leading_indices(f).empty());
    CHECK(nullspace_oracle(f).dimension() == 0);
}

TEST_CASE("duplicating an operator yields one syzygy per reducible generator") {
    OperatorFamily base = illustration_family();
    BasisPtr b = base.basis();
    OperatorFamily f(b, {base.op(1), base.op(1)});
    SyzygyBasis basis = syzygy_basis(f);
    REQUIRE(basis.dimension() == 2);  // Red(T2) = {g3, g5}
    CHECK(basis.rows()[0] == prow({{{1, 2}, 1}, {{0, 2}, -1}}));
    CHECK(basis.rows()[1] == prow({{{1, 4}, 1}, {{0, 4}, -1}}));
    CHECK(basis == nullspace_oracle(f));
}

TEST_CASE("leading indices come from prefix meets and joins alone") {
    OperatorFamily f = illustration_family();
    CHECK(syzygy_leading_indices(f) == std::vector<ProductIndex>{e3, e6});

    BasisPtr b = f.basis();
    OperatorFamily with_id(
        b, {f.op(1), ReductionOperator::identity(b), f.op(1)});
    for (const ProductIndex& idx : syzygy_leading_indices(with_id))
        CHECK(idx.op != 1);  // the identity slot reduces nothing
}

TEST_CASE("oracle equals the construction on the worked example") {
    OperatorFamily f = illustration_family();
    CHECK(nullspace_oracle(f) == syzygy_basis(f));
}

TEST_CASE("pair syzygies are the image of ker(join) under v -> (-v, v)") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 100; ++trial) {
        BasisPtr b = g_basis(std::uniform_int_distribution<int>(1, 8)(rng));
        ReductionOperator t1 = random_operator(rng, b);
        ReductionOperator t2 = random_operator(rng, b);
        OperatorFamily pair(b, {t1, t2});

        std::vector<ProductRow> image;
        for (const Vector& v :
             subspace_intersection(t1.kernel(), t2.kernel()).elements()) {
            ProductRow w;
            for (const auto& [g, c] : t1.t_decomposition(v))
                w.add_term({0, g}, -c);
            for (const auto& [g, c] : t2.t_decomposition(v)) w.add_term({1, g}, c);
            CHECK(pi_f(pair, w).is_zero());
            image.push_back(std::move(w));
        }
        CHECK(reduced_echelon(std::move(image)) == syzygy_basis(pair).rows());
    }
}

TEST_CASE("construction agrees with the oracle on random families" *
          doctest::timeout(120)) {
    std::mt19937_64 rng(20250101);
    for (int trial = 0; trial < 150; ++trial) {
        OperatorFamily f = random_family(rng);
        SyzygyBasis built = syzygy_basis(f);
        SyzygyBasis oracle = nullspace_oracle(f);
        CHECK(built == oracle);

        // rank-nullity across pi
        int dim_ker_f = 0;
        for (const ReductionOperator& t : f.ops())
            dim_ker_f += t.kernel().dimension();
        const int dim_meet =
            meet_family(f.basis(), f.ops()).kernel().dimension();
        CHECK(built.dimension() == dim_ker_f - dim_meet);

        // every element is a syzygy with the predicted leading index
        for (const ProductRow& row : built.rows())
            CHECK(pi_f(f, row).is_zero());
        CHECK(built.leading_indices() == syzygy_leading_indices(f));

        // canonical decompositions avoid the leading indices and lift v
        OperatorFamily prefix = f;
        Vector v(f.basis());
        for (const ReductionOperator& t : f.ops())
            for (const Vector& e : t.kernel().elements())
                v.add_scaled(e, std::uniform_int_distribution<int>(-2, 2)(rng));
        ProductRow w = canonical_decomposition(prefix, built, v);
        CHECK(pi_f(f, w) == v);
        for (const ProductIndex& idx : built.leading_indices())
            CHECK(w.coeff(idx) == 0);
    }
}

}  // TEST_SUITE

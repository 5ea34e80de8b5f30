#include <doctest.h>

#include "oracles.hpp"
#include "prelie/error.hpp"
#include "prelie/rota_baxter.hpp"

using namespace prelie;

namespace {

RBOperator op(Field f, const std::vector<std::vector<long>>& rows, long weight) {
    return {Matrix::from_ints(f, rows), f.from_integer(weight)};
}

std::vector<std::uint64_t> indices(const std::vector<RBOperator>& ops) {
    std::vector<std::uint64_t> out;
    for (const auto& r : ops) {
        out.push_back(index_of_matrix(r.matrix));
    }
    return out;
}

} // namespace

TEST_CASE("trivial operators") {
    for (const char* name : {"q", "gf3", "gf5", "qi"}) {
        Field f = parse_field_name(name);
        for (std::size_t n = 1; n <= 4; ++n) {
            Algebra a = build_In(f, n);
            for (long w : {0L, 1L, 2L}) {
                Scalar lambda = f.from_integer(w);
                RBOperator zero{Matrix(f, n, n), lambda};
                RBOperator minus{-(lambda * Matrix::identity(f, n)), lambda};
                CHECK(is_rb(a, zero).holds);
                CHECK(is_rb(a, minus).holds);
                CHECK(phi_conjugate(zero) == minus);
                CHECK(classify_case(a, zero).kind == RBCase::trivial);
                CHECK(all_zero(rb_residuals_In(a, zero)));
            }
        }
    }
}

TEST_CASE("phi is an involution preserving the axiom") {
    Field f = parse_field_name("gf3");
    Algebra a = build_In(f, 3);
    for (long w = 0; w < 3; ++w) {
        for (const RBOperator& r : enumerate_rb_finite(a, f.from_integer(w))) {
            RBOperator p = phi_conjugate(r);
            CHECK(phi_conjugate(p) == r);
            CHECK(is_rb(a, p).holds);
        }
    }
}

TEST_CASE("enumeration agrees with the oracle") {
    for (auto [n, p] : {std::pair<std::size_t, long>{1, 3}, {2, 3}, {2, 5}, {3, 3}, {1, 7}, {2, 7}}) {
        Field f = parse_field_name("gf" + std::to_string(p));
        Algebra a = build_In(f, n);
        for (long w = 0; w < p; ++w) {
            CAPTURE(n);
            CAPTURE(p);
            CAPTURE(w);
            CHECK(indices(enumerate_rb_finite(a, f.from_integer(w))) == oracle::rb_indices(n, w, p));
        }
    }
}

TEST_CASE("residual system agrees with the axiom") {
    Field f = parse_field_name("gf3");
    for (std::size_t n = 1; n <= 2; ++n) {
        Algebra a = build_In(f, n);
        for (std::uint64_t t = 0; t < oracle::power(3, static_cast<unsigned>(n * n)); ++t) {
            for (long w = 0; w < 3; ++w) {
                RBOperator r{matrix_from_index(f, n, t), f.from_integer(w)};
                CHECK(all_zero(rb_residuals_In(a, r)) == is_rb(a, r).holds);
            }
        }
    }
    Field q = parse_field_name("q");
    auto res = rb_residuals_In(build_In(q, 3), op(q, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 0));
    const NamedResidual* bad = first_nonzero(res);
    REQUIRE(bad != nullptr);
    CHECK(bad->name.rfind("rb.", 0) == 0);
}

TEST_CASE("structure of every enumerated operator") {
    for (auto [n, p] : {std::pair<std::size_t, long>{2, 3}, {2, 5}, {3, 3}}) {
        Field f = parse_field_name("gf" + std::to_string(p));
        Algebra a = build_In(f, n);
        for (long w = 0; w < p; ++w) {
            for (const RBOperator& r : enumerate_rb_finite(a, f.from_integer(w))) {
                CHECK(is_splitting(r));
                Theorem2Verdict v = theorem2_check(a, r);
                CHECK(v.report.holds);
                CHECK(v.r2_plus_lr_zero);
                CHECK((v.ata_zero || v.phi_ata_zero));
                CaseCertificate c = classify_case(a, r);
                CHECK(c.check.holds);
                // Splitting recovered from the kernels.
                Decomposition d = kernel_decomposition(r);
                if (w != 0) {
                    CHECK(splitting_from_decomposition(a, d, r.weight) == r);
                }
            }
        }
    }
}

TEST_CASE("splitting operators of explicit decompositions") {
    Field f = parse_field_name("gf5");
    Algebra a = build_In(f, 2);
    Subspace e1 = Subspace::span(f, 2, {a.basis(0)});
    Subspace e2 = Subspace::span(f, 2, {a.basis(1)});
    // Span{e_1} is not a subalgebra.
    CHECK_THROWS_AS(splitting_from_decomposition(a, {e1, e2, {}, {}}, f.one()), Error);
    CHECK_THROWS_AS(splitting_from_decomposition(a, {e2, e2, {}, {}}, f.one()), Error);
    Decomposition trivial{Subspace::whole(f, 2), Subspace(f, 2), {}, {}};
    CHECK(splitting_from_decomposition(a, trivial, f.one()).matrix.is_zero());
    // e_1 + 2 e_2 spans a subalgebra mod 5 since 2^2 = -1.
    Subspace iso = Subspace::span(f, 2, {Vector(f, {f.one(), f.from_integer(2)})});
    RBOperator r = splitting_from_decomposition(a, {iso, e2, {}, {}}, f.one());
    CHECK(is_rb(a, r).holds);
    CHECK(kernel_decomposition(r).a1 == iso);
    CHECK(kernel_decomposition(r).a2 == e2);
}

TEST_CASE("theorem 2 on -lambda E and rejection of non-operators") {
    Field q = parse_field_name("q");
    Algebra a = build_In(q, 3);
    RBOperator minus = op(q, {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, 1);
    Theorem2Verdict v = theorem2_check(a, minus);
    CHECK(v.report.holds);
    CHECK_FALSE(v.ata_zero);
    CHECK(v.phi_ata_zero);
    RBOperator bogus = op(q, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 0);
    CHECK_FALSE(is_rb(a, bogus).holds);
    CHECK(is_rb(a, bogus).witness.size() == 2);
    CHECK_THROWS_AS(theorem2_check(a, bogus), Error);
    CHECK_THROWS_AS(classify_case(a, bogus), Error);
    CHECK_THROWS_AS(classify_case(build_example1(q, 2, Vector(q, {q.one(), q.one()})), minus), Error);
}

TEST_CASE("case split") {
    Field f = parse_field_name("gf5");
    Algebra a = build_In(f, 2);
    bool saw1 = false, saw2 = false;
    for (long w = 0; w < 5; ++w) {
        for (const RBOperator& r : enumerate_rb_finite(a, f.from_integer(w))) {
            CaseCertificate c = classify_case(a, r);
            if (c.kind == RBCase::case1) {
                saw1 = true;
                REQUIRE(c.s);
                REQUIRE(c.s_square_defect);
                CHECK(c.s_square_defect->is_zero());
                CHECK_FALSE(r.matrix(1, 0).is_zero());
            }
            if (c.kind == RBCase::case2) {
                saw2 = true;
                REQUIRE(c.alpha_n);
                CHECK((c.alpha_n->is_zero() || *c.alpha_n == -r.weight));
                CHECK(c.phi_normalized == !c.alpha_n->is_zero());
            }
        }
    }
    CHECK(saw1);
    CHECK(saw2);
    CHECK(to_string(RBCase::case1) == "1");
    CHECK(to_string(RBCase::trivial) == "trivial");
}

TEST_CASE("rb index") {
    Field f3 = parse_field_name("gf3");
    Field f5 = parse_field_name("gf5");
    CHECK(rb_index_finite(build_In(f3, 1), f3.one()) == 1u);
    CHECK(rb_index_finite(build_In(f5, 2), f5.one()) == 2u);
    CHECK(rb_index_finite(build_In(f5, 2), f5.zero()) == 1u);
    CHECK(rb_index_finite(build_In(f3, 2), f3.one()) == 1u);
    CHECK(rb_index_finite(build_In(f3, 3), f3.zero()) == 2u);
    Field q = parse_field_name("q");
    CHECK(rb_index_of(op(q, {{0, 0}, {0, 0}}, 1)) == 1u);
    CHECK(rb_index_of(op(q, {{-1, 0}, {0, -1}}, 1)) == 1u);
    CHECK(rb_index_of(op(q, {{0, 1}, {0, 0}}, 0)) == 2u);
    CHECK(rb_index_of(op(q, {{1, 0}, {0, 1}}, 0)) == std::nullopt);
}

TEST_CASE("decompositions of I_2 over GF(5)") {
    Field f = parse_field_name("gf5");
    Algebra a = build_In(f, 2);
    auto all = lagrangian_decompositions_finite(a);
    std::size_t normal = 0, both = 0;
    for (const auto& c : all) {
        CHECK(c.shape != DecompositionShape::violation);
        normal += c.shape == DecompositionShape::normal_form;
        both += c.shape == DecompositionShape::both_lagrangian;
        RBOperator r = splitting_from_decomposition(a, c.decomposition, f.one());
        CHECK(is_rb(a, r).holds);
    }
    CHECK(normal == 6);
    CHECK(both == 2);
    // Each weight-1 operator is the splitting operator of exactly one pair.
    CHECK(enumerate_rb_finite(a, f.one()).size() == all.size());
}

TEST_CASE("decompositions over GF(3)") {
    Field f = parse_field_name("gf3");
    for (std::size_t n : {2u, 3u}) {
        auto all = lagrangian_decompositions_finite(build_In(f, n));
        for (const auto& c : all) {
            CHECK(c.shape == DecompositionShape::normal_form);
            REQUIRE(c.decomposition.w);
            REQUIRE(c.decomposition.u);
            CHECK(c.decomposition.w->dim() + c.decomposition.u->dim() + 1 == n);
        }
        CHECK(all.size() == (n == 2 ? 2u : 26u));
    }
}

TEST_CASE("example operators") {
    Field qi = parse_field_name("qi");
    // 1/sqrt(2 - n) needs sqrt(-1), sqrt(-2), sqrt(-3), sqrt(-4) = 2i.
    for (auto [n, name] : {std::pair<std::size_t, const char*>{3, "qi"}, {4, "q(sqrt-2)"}, {5, "q(sqrt-3)"}, {6, "qi"}}) {
        Field f = parse_field_name(name);
        RBOperator r = example4_operator(f, n);
        Algebra a = build_In(f, n);
        CHECK(is_rb(a, r).holds);
        CHECK(theorem2_check(a, r).report.holds);
        CHECK(classify_case(a, r).kind == RBCase::case2);
        CHECK(r.weight.is_zero());
    }
    CHECK_THROWS_AS(example4_operator(qi, 4), Error);
    CHECK_THROWS_AS(example4_operator(parse_field_name("q"), 3), Error);
    CHECK_THROWS_AS(example4_operator(qi, 2), Error);
    CHECK_THROWS_AS(example4_operator(qi, 5), Error);
    CHECK_THROWS_AS(example4_operator(parse_field_name("gf3"), 5), Error);
    Field f5 = parse_field_name("gf5");
    CHECK(is_rb(build_In(f5, 3), example4_operator(f5, 3)).holds);

    RBOperator r5 = example5_operator(qi);
    CHECK(is_rb(build_In(qi, 4), r5).holds);
    CHECK((r5.matrix.transpose() * r5.matrix).is_zero());
    CHECK_FALSE(r5.matrix.is_zero());
    CHECK_THROWS_AS(example5_operator(parse_field_name("q")), Error);

    for (int sign : {1, -1}) {
        Decomposition d = example6_decomposition(qi, sign);
        RBOperator r = splitting_from_decomposition(build_In(qi, 2), d, qi.from_integer(3));
        CHECK(is_rb(build_In(qi, 2), r).holds);
    }
    CHECK_THROWS_AS(example6_decomposition(qi, 2), Error);
}

TEST_CASE("over Q the transpose condition forces zero") {
    Field q = parse_field_name("q");
    CHECK(totally_real_mechanism_check(Matrix::from_ints(q, {{1, 2}, {3, -1}})).holds);
    CHECK(totally_real_mechanism_check(Matrix(q, 3, 3)).holds);
    CHECK_THROWS_AS(totally_real_mechanism_check(Matrix::identity(parse_field_name("qi"), 2)), Error);
    // Over Q(i) the same condition has nonzero solutions.
    CHECK((example5_operator(parse_field_name("qi")).matrix.transpose() *
           example5_operator(parse_field_name("qi")).matrix).is_zero());
}

TEST_CASE("unital lift") {
    Field f = parse_field_name("gf3");
    Algebra a = build_In(f, 2);
    Algebra u = unital_extension(a);
    for (long w = 0; w < 3; ++w) {
        Scalar lambda = f.from_integer(w);
        for (const RBOperator& r : enumerate_rb_finite(a, lambda)) {
            CHECK(is_rb(u, {unital_lift(r.matrix, -lambda), lambda}).holds);
            CHECK(is_rb(u, {unital_lift(r.matrix, f.zero()), lambda}).holds);
            // R(1) = c1 needs c^2 + lambda c = 0; c = 1 - lambda is a root only for lambda = 1.
            CHECK(is_rb(u, {unital_lift(r.matrix, f.one() - lambda), lambda}).holds == (w == 1));
        }
    }
}

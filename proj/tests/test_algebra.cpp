#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgl/corpus.hpp"
#include "sgl/errors.hpp"

using namespace sgl;

namespace {

const Field Q = Field::rationals();

bool has_kind(const ValidationReport& r, Violation::Kind k) {
    for (const auto& v : r.violations)
        if (v.kind == k) return true;
    return false;
}

// [x,[y,z]] = [[x,y],z] - (-1)^{|y||z|} [[x,z],y] on all basis triples, by brute force.
bool literal_leibniz(const Algebra& alg) {
    const int p = static_cast<int>(alg.field().characteristic());
    const std::size_t n = alg.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                auto X = oracle::unit(n, x), Y = oracle::unit(n, y), Z = oracle::unit(n, z);
                auto lhs = oracle::bracket(alg, p, X, oracle::bracket(alg, p, Y, Z));
                auto r1 = oracle::bracket(alg, p, oracle::bracket(alg, p, X, Y), Z);
                auto r2 = oracle::bracket(alg, p, oracle::bracket(alg, p, X, Z), Y);
                const bool odd = alg.element(y).parity == Parity::Odd && alg.element(z).parity == Parity::Odd;
                for (std::size_t k = 0; k < n; ++k)
                    if (((r1[k] + (odd ? r2[k] : -r2[k]) - lhs[k]) % p + p) % p != 0) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("validate: hand-built examples") {
    CHECK(validate(fx::abelian({"a", "b", "c"})).valid());
    CHECK(validate(fx::n2()).valid());
    CHECK(validate(fx::heisenberg()).valid());
    CHECK(validate(fx::so3(Field::prime(5))).valid());

    SUBCASE("a product spread over two labels breaks the set grading") {
        auto bad = fx::build(Q, {{"x", "a", Parity::Even}, {"y", "b", Parity::Even}}, {{0, 0, {{0, 1}, {1, 1}}}});
        auto r = validate(bad);
        REQUIRE_FALSE(r.valid());
        CHECK(has_kind(r, Violation::Kind::SetGrading));
        for (const auto& v : r.violations)
            if (v.kind == Violation::Kind::SetGrading) CHECK(v.labels == std::vector<std::string>{"a", "a"});
    }
    SUBCASE("even times even landing in an odd line breaks parity") {
        auto bad = fx::build(Q, {{"x", "a", Parity::Even}, {"y", "b", Parity::Odd}}, {{0, 0, {{1, 1}}}});
        CHECK(has_kind(validate(bad), Violation::Kind::Parity));
    }
    SUBCASE("[x,x] = x fails the identity at the triple (x,x,x)") {
        auto bad = fx::build(Q, {{"x", "a", Parity::Even}}, {{0, 0, {{0, 1}}}});
        auto r = validate(bad);
        REQUIRE(has_kind(r, Violation::Kind::SuperLeibniz));
        CHECK(r.violations.front().witness == std::vector<std::size_t>{0, 0, 0});
        CHECK_THROWS_AS(require_valid(bad), PreconditionError);
    }
    SUBCASE("distinguished label constraints") {
        CHECK(has_kind(validate(fx::n2(Q, "nowhere")), Violation::Kind::Distinguished));
        CHECK(validate(fx::n2(Q, "b")).valid());
        // [y, x] = y with y in L_o gives o * a = {o}.
        auto bad = fx::build(Q, {{"x", "a", Parity::Even}, {"y", "o", Parity::Even}}, {{1, 0, {{1, 1}}}}, "o");
        CHECK(has_kind(validate(bad), Violation::Kind::Distinguished));
    }
    SUBCASE("odd generators obey the signed identity") {
        // Odd x with [x,x] = y even: [x,[x,x]] = 0 and the right side cancels with the sign +.
        auto sup = fx::build(Q, {{"x", "a", Parity::Odd}, {"y", "b", Parity::Even}}, {{0, 0, {{1, 1}}}});
        CHECK(validate(sup).valid());
    }
}

TEST_CASE("validate agrees with the literal identity on perturbations") {
    std::size_t compared = 0;
    for (const auto& e : standard_corpus(3)) {
        const auto& alg = e.algebra;
        if (alg.field().is_rational() || alg.dim() > 8) continue;
        for (std::uint64_t s = 1; s <= 3; ++s) {
            auto pert = gen_perturb(alg, 1, s * 7919 + compared);
            const auto rep = validate(pert.algebra);
            CHECK(pert.expected_valid == rep.valid());
            if (!literal_leibniz(pert.algebra)) CHECK(has_kind(rep, Violation::Kind::SuperLeibniz));
            else CHECK_FALSE(has_kind(rep, Violation::Kind::SuperLeibniz));
            ++compared;
        }
        if (compared > 60) break;
    }
    CHECK(compared > 30);
}

TEST_CASE("multiply and pieces") {
    const auto alg = fx::n2();
    const Vector x = alg.unit(0), y = alg.unit(1);
    CHECK(multiply(alg, x, x) == y);
    CHECK(multiply(alg, alg.zero_vector(), x).is_zero());
    CHECK(multiply(alg, x + y, x) == y);
    CHECK(homogeneous_piece(alg, "a", Parity::Even) == Subspace::span(Q, 2, std::vector{x}));
    CHECK(homogeneous_piece(alg, "a", Parity::Odd).is_zero());
    CHECK(homogeneous_piece(alg, "z", Parity::Even).is_zero());
    CHECK(product_target_labels(alg, "a", "a") == std::set<std::string>{"b"});
    CHECK(product_target_labels(alg, "b", "a").empty());
    REQUIRE(cell_of(alg, y).has_value());
    CHECK(cell_of(alg, y)->label == "b");
    CHECK_FALSE(cell_of(alg, x + y).has_value());
    CHECK_FALSE(cell_of(alg, alg.zero_vector()).has_value());
}

TEST_CASE("Lie superalgebra detection and symmetrized brackets") {
    CHECK(is_lie_superalgebra(fx::abelian({"a"})));
    CHECK_FALSE(is_lie_superalgebra(fx::n2()));
    CHECK(is_lie_superalgebra(fx::heisenberg()));
    CHECK(symmetrized_bracket(fx::n2(), 0, 0) == Vector::from_ints(Q, {0, 2}));
    CHECK(symmetrized_bracket(fx::n2(Field::prime(2)), 0, 0).is_zero());
    CHECK_FALSE(validate(fx::n2(Field::prime(2))).warnings.empty());
}

TEST_CASE("graded subspaces") {
    const auto alg = fx::n2();
    auto whole = GradedSubspace::from_subspace(alg, whole_space(alg));
    CHECK(whole.dim() == 2);
    CHECK(whole.pieces().size() == 2);
    const Vector mixed = alg.unit(0) + alg.unit(1);
    CHECK_THROWS_AS(GradedSubspace::from_subspace(alg, Subspace::span(Q, 2, std::vector{mixed})), PreconditionError);
}

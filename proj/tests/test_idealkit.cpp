#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgl/corpus.hpp"
#include "sgl/errors.hpp"
#include "sgl/ideals.hpp"
#include "sgl/support_graph.hpp"

using namespace sgl;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

Subspace line(const Algebra& alg, std::size_t i) { return Subspace::span(alg.field(), alg.dim(), std::vector{alg.unit(i)}); }

/// Exhaustive count of central vectors, as a dimension.
std::size_t brute_center_dim(const Algebra& alg) {
    const int p = static_cast<int>(alg.field().characteristic());
    const std::size_t n = alg.dim();
    std::size_t count = 0, total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < total; ++code) {
        oracle::Coords v(n);
        for (std::size_t i = 0, c = code; i < n; ++i, c /= static_cast<std::size_t>(p)) v[i] = static_cast<int>(c % static_cast<std::size_t>(p));
        bool central = true;
        for (std::size_t k = 0; k < n && central; ++k) {
            for (int x : oracle::bracket(alg, p, v, oracle::unit(n, k))) central = central && x == 0;
            for (int x : oracle::bracket(alg, p, oracle::unit(n, k), v)) central = central && x == 0;
        }
        count += central;
    }
    std::size_t d = 0;
    while (count > 1) count /= static_cast<std::size_t>(p), ++d;
    return d;
}

}  // namespace

TEST_CASE("ideal closure on N2") {
    const auto alg = fx::n2();
    auto from_y = ideal_closure(alg, std::vector{alg.unit(1)});
    CHECK(from_y.subspace.total() == line(alg, 1));
    CHECK(from_y.iterations == 0);

    auto from_x = ideal_closure(alg, std::vector{alg.unit(0)});
    CHECK(from_x.subspace.total() == whole_space(alg));
    CHECK(from_x.iterations == 1);

    CHECK(ideal_closure(alg, std::vector<Vector>{}).subspace.is_zero());
    CHECK_THROWS_AS(ideal_closure(alg, std::vector{alg.unit(0) + alg.unit(1)}), PreconditionError);
}

TEST_CASE("frak_I") {
    CHECK(frak_I(fx::n2()).total() == line(fx::n2(), 1));
    CHECK(frak_I(fx::n2(Field::prime(2))).is_zero());
    CHECK(frak_I(fx::heisenberg()).is_zero());
    CHECK(frak_I(fx::so3(F5)).is_zero());
    CHECK(frak_I(fx::abelian({"a", "b"})).is_zero());
}

TEST_CASE("center") {
    CHECK(center(fx::abelian({"a", "b", "c"})).dim() == 3);
    CHECK(center(fx::n2()) == line(fx::n2(), 1));
    const auto pair = fx::n2_pair();
    CHECK(center(pair) == Subspace::span(Q, 4, std::vector{pair.unit(1), pair.unit(3)}));
    CHECK(center(fx::heisenberg()) == line(fx::heisenberg(), 2));
    CHECK(center(fx::so3()).is_zero());
}

TEST_CASE("Lie-annihilator") {
    CHECK(lie_annihilator(fx::abelian({"a", "b"})).dim() == 2);
    CHECK(lie_annihilator(fx::n2()) == line(fx::n2(), 1));
    CHECK(lie_annihilator(fx::heisenberg()) == center(fx::heisenberg()));
    CHECK(lie_annihilator(fx::so3()) == center(fx::so3()));
}

TEST_CASE("tightness") {
    CHECK(is_tight(fx::n2()));
    CHECK(is_tight(fx::n2(Q, "b")));
    CHECK(o_pair_span(fx::n2(Q, "b")) == line(fx::n2(), 1));
    // L_o = L_a is nonzero but no pair lands in it.
    CHECK_FALSE(is_tight(fx::n2(Q, "a")));
    CHECK(o_pair_span(fx::n2(Q, "a")).is_zero());
}

TEST_CASE("simplicity oracle: pinned verdicts") {
    auto n2 = simplicity_oracle(fx::n2());
    CHECK(n2.verdict == Verdict::Simple);
    CHECK_FALSE(n2.sampled);
    CHECK_FALSE(n2.witness);

    auto ab = simplicity_oracle(fx::abelian({"a", "b"}));
    CHECK(ab.verdict == Verdict::NotSimple);
    REQUIRE(ab.witness);
    CHECK(ab.witness->dim() == 1);

    auto one = simplicity_oracle(fx::abelian({"a"}));
    CHECK(one.verdict == Verdict::NotSimple);
    CHECK_FALSE(one.witness);

    const auto pair = fx::n2_pair();
    auto pv = simplicity_oracle(pair);
    CHECK(pv.verdict == Verdict::NotSimple);
    REQUIRE(pv.witness);
    const auto w = pv.witness->total();
    CHECK(w == Subspace::span(Q, 4, std::vector{pair.unit(0), pair.unit(1)}));

    CHECK(simplicity_oracle(fx::so3()).verdict == Verdict::Simple);
    CHECK(simplicity_oracle(fx::heisenberg()).verdict == Verdict::NotSimple);
}

TEST_CASE("simplicity oracle: NotSimple witnesses are proper ideals outside {0, frak_I, L}") {
    for (const auto& e : standard_corpus()) {
        auto v = simplicity_oracle(e.algebra);
        CAPTURE(e.name);
        if (v.verdict != Verdict::NotSimple || !v.witness) continue;
        const auto w = v.witness->total();
        const auto I = frak_I(e.algebra).total();
        CHECK_FALSE(w.is_zero());
        CHECK_FALSE(w == I);
        CHECK_FALSE(w == whole_space(e.algebra));
        CHECK(ideal_closure(e.algebra, *v.witness).subspace.total() == w);
    }
}

TEST_CASE("simplicity oracle agrees with literal ideal enumeration on small prime-field algebras") {
    std::vector<Algebra> cases = {fx::n2(F5), fx::n2_pair(F5), fx::heisenberg(F5), fx::so3(F5), fx::so3(Field::prime(7)),
                                  fx::abelian({"a", "b"}, F5)};
    for (const auto& e : standard_corpus())
        if (!e.algebra.field().is_rational() && e.algebra.dim() <= 3) cases.push_back(e.algebra);
    for (const auto& alg : cases) {
        auto lit = oracle::literal_simplicity(alg);
        auto v = simplicity_oracle(alg);
        CHECK_FALSE(v.sampled);
        CHECK((v.verdict == Verdict::Simple) == lit.simple);
        CHECK(frak_I(alg).dim() == lit.frak_I_dim);
    }
}

TEST_CASE("[L, frak_I] = 0 and frak_I vanishes exactly on Lie superalgebras") {
    std::size_t right_nonzero = 0;
    for (const auto& e : standard_corpus()) {
        const auto& alg = e.algebra;
        const auto I = frak_I(alg).total();
        CAPTURE(e.name);
        for (const auto& v : I.rows())
            for (std::size_t k = 0; k < alg.dim(); ++k) {
                CHECK(left_basis_product(alg, k, v).is_zero());
                right_nonzero += !right_basis_product(alg, v, k).is_zero();
            }
        if (alg.field().characteristic() != 2) CHECK(I.is_zero() == is_lie_superalgebra(alg));
    }
    // Only the left action is forced to vanish; the corpus has instances with [frak_I, L] != 0.
    CHECK(right_nonzero > 0);
}

TEST_CASE("center and Lie-annihilator properties") {
    for (const auto& e : standard_corpus()) {
        const auto& alg = e.algebra;
        CAPTURE(e.name);
        const auto z = center(alg);
        const auto with_o = lie_annihilator(alg, true);
        const auto without_o = lie_annihilator(alg, false);
        CHECK(with_o.contains(z));
        CHECK(without_o.contains(with_o));
        if (!alg.field().is_rational() && std::pow(alg.field().characteristic(), alg.dim()) <= 20000.0)
            CHECK(z.dim() == brute_center_dim(alg));
    }
}

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgl/errors.hpp"
#include "sgl/linalg.hpp"

using namespace sgl;

namespace {

Subspace span_of(Field f, std::size_t n, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<Vector> v;
    for (auto r : rows) v.push_back(Vector::from_ints(f, r));
    return Subspace::span(f, n, v);
}

const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

}  // namespace

TEST_CASE("field arithmetic") {
    SUBCASE("rational literals are canonical") {
        CHECK(Q.parse("6/8") == Q.parse("3/4"));
        CHECK(Q.parse("-2").to_string() == "-2");
        CHECK(Q.parse("3/4").to_string() == "3/4");
        CHECK_THROWS_AS(Q.parse("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(Q.parse("x"), std::invalid_argument);
    }
    SUBCASE("prime field reduces and inverts") {
        CHECK(F7.parse("9") == F7.from_int(2));
        CHECK(F7.parse("-1") == F7.from_int(6));
        for (long long a = 1; a < 7; ++a) CHECK((F7.from_int(a) * F7.from_int(a).inverse()).is_one());
        CHECK_THROWS_AS(F7.parse("1/2"), std::invalid_argument);
        CHECK_THROWS(F7.zero().inverse());
    }
    SUBCASE("non-prime moduli are rejected") {
        CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
        CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    }
    SUBCASE("mixing fields is a mismatch") {
        CHECK_THROWS_AS(Q.one() + F7.one(), MismatchError);
        CHECK_THROWS_AS(Field::prime(5).one() * F7.one(), MismatchError);
    }
}

TEST_CASE("rref") {
    CHECK(rref(std::vector{Vector::from_ints(Q, {0, 0})}).dim() == 0);
    auto s = rref(std::vector{Vector::from_ints(Q, {2, 0}), Vector::from_ints(Q, {1, 0})});
    REQUIRE(s.dim() == 1);
    CHECK(s.rows()[0] == Vector::from_ints(Q, {1, 0}));
    auto t = rref(std::vector{Vector::from_ints(F7, {1, 1}), Vector::from_ints(F7, {0, 1})});
    REQUIRE(t.dim() == 2);
    CHECK(t.rows()[0] == Vector::from_ints(F7, {1, 0}));
    CHECK(t.rows()[1] == Vector::from_ints(F7, {0, 1}));
    CHECK_THROWS_AS(rref(std::vector<Vector>{}), std::invalid_argument);
    CHECK_THROWS_AS(rref(std::vector{Vector::from_ints(Q, {1}), Vector::from_ints(Q, {1, 0})}), MismatchError);
}

TEST_CASE("sum, intersect, complement, contains") {
    const auto zero = Subspace(Q, 2);
    const auto plane = Subspace::full(Q, 2);
    const auto x = span_of(Q, 2, {{1, 0}});
    const auto y = span_of(Q, 2, {{0, 1}});
    const auto d = span_of(Q, 2, {{1, 1}});

    CHECK(sum(x, zero) == x);
    CHECK(sum(x, y) == plane);
    CHECK(sum(d, span_of(Q, 2, {{2, 2}})) == d);

    CHECK(intersect(x, x) == x);
    CHECK(intersect(x, y).is_zero());
    CHECK(intersect(plane, d) == d);

    CHECK(complement_in(zero, plane) == plane);
    CHECK(complement_in(plane, plane).is_zero());
    CHECK(complement_in(x, plane) == y);
    CHECK_THROWS_AS(complement_in(x, y), PreconditionError);

    CHECK(zero.contains(Vector(Q, 2)));
    CHECK_FALSE(x.contains(Vector::from_ints(Q, {0, 1})));
    CHECK(d.contains(Vector::from_ints(Q, {3, 3})));
    CHECK_THROWS_AS(x.contains(Vector::from_ints(F7, {1, 0})), MismatchError);
}

TEST_CASE("kernel of a small map") {
    // e0 -> (1,1), e1 -> (2,2), e2 -> (0,1): kernel is span{(2,-1,0)}.
    auto k = kernel(Q, std::vector{Vector::from_ints(Q, {1, 1}), Vector::from_ints(Q, {2, 2}), Vector::from_ints(Q, {0, 1})});
    REQUIRE(k.dim() == 1);
    CHECK(k.contains(Vector::from_ints(Q, {2, -1, 0})));
}

TEST_CASE("subspace operations agree with exhaustive enumeration over GF(5)") {
    const Field F5 = Field::prime(5);
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> coef(0, 4), count(0, 3);
    auto random_rows = [&](std::size_t n) {
        std::vector<Vector> rows;
        for (int k = count(rng); k > 0; --k) {
            std::vector<Scalar> c;
            for (std::size_t i = 0; i < n; ++i) c.push_back(F5.from_int(coef(rng)));
            rows.emplace_back(F5, std::move(c));
        }
        return rows;
    };
    auto coords = [](const std::vector<Vector>& rows) {
        std::vector<oracle::Coords> out;
        for (const auto& r : rows) out.push_back(oracle::to_coords(r, 5));
        return out;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        auto ra = random_rows(n), rb = random_rows(n);
        auto A = Subspace::span(F5, n, ra), B = Subspace::span(F5, n, rb);
        auto ea = oracle::span_elements(5, n, coords(ra)), eb = oracle::span_elements(5, n, coords(rb));

        CHECK(A.dim() == oracle::span_dim(5, n, coords(ra)));
        CHECK(oracle::span_elements(5, n, coords(A.rows())) == ea);

        auto all = ra;
        all.insert(all.end(), rb.begin(), rb.end());
        CHECK(oracle::span_elements(5, n, coords(sum(A, B).rows())) == oracle::span_elements(5, n, coords(all)));

        std::unordered_set<std::uint64_t> common;
        for (auto e : ea)
            if (eb.count(e)) common.insert(e);
        CHECK(oracle::span_elements(5, n, coords(intersect(A, B).rows())) == common);

        auto S = sum(A, B);
        auto C = complement_in(A, S);
        CHECK(intersect(A, C).is_zero());
        CHECK(sum(A, C) == S);

        for (int probe = 0; probe < 5; ++probe) {
            std::vector<Scalar> c;
            oracle::Coords raw;
            for (std::size_t i = 0; i < n; ++i) raw.push_back(coef(rng)), c.push_back(F5.from_int(raw.back()));
            CHECK(A.contains(Vector(F5, c)) == (ea.count(oracle::encode(raw, 5)) > 0));
        }
    }
}

TEST_CASE("rref is canonical over Q") {
    // Two generating sets of one plane give identical reduced rows.
    auto a = span_of(Q, 3, {{1, 2, 3}, {4, 5, 6}});
    auto b = span_of(Q, 3, {{5, 7, 9}, {3, 3, 3}});
    CHECK(a == b);
    CHECK(a.rows() == b.rows());
    CHECK(a.pivots() == std::vector<std::size_t>{0, 1});
}

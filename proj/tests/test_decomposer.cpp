#include <doctest.h>

#include "fixtures.hpp"
#include "sgl/corpus.hpp"
#include "sgl/decomposer.hpp"
#include "sgl/ideals.hpp"
#include "sgl/support_graph.hpp"

using namespace sgl;

namespace {

const Field Q = Field::rationals();

const Check& find_check(const DecompositionReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    FAIL("no check named " << name);
    return r.checks.front();
}

Subspace span_units(const Algebra& alg, std::initializer_list<std::size_t> idx) {
    std::vector<Vector> rows;
    for (auto i : idx) rows.push_back(alg.unit(i));
    return Subspace::span(alg.field(), alg.dim(), rows);
}

// Ideal sweep written against multiply() on basis vectors of L and of W.
bool literal_ideal(const Algebra& alg, const Subspace& w) {
    for (const auto& v : w.rows())
        for (std::size_t k = 0; k < alg.dim(); ++k)
            if (!w.contains(multiply(alg, alg.unit(k), v)) || !w.contains(multiply(alg, v, alg.unit(k)))) return false;
    return true;
}

}  // namespace

TEST_CASE("class heads") {
    auto plain = fx::n2();
    for (const auto& c : connection_classes(plain)) CHECK(class_head(plain, c).is_zero());

    auto with_o = fx::n2(Q, "b");
    auto classes = connection_classes(with_o);
    REQUIRE(classes.size() == 1);
    CHECK(class_head(with_o, classes[0]) == span_units(with_o, {1}));

    auto ab = fx::abelian({"a", "b"});
    ab.set_distinguished("a");
    for (const auto& c : connection_classes(ab)) CHECK(class_head(ab, c).is_zero());
}

TEST_CASE("class ideals") {
    auto alg = fx::n2();
    auto ci = class_ideal(alg, connection_classes(alg)[0]);
    CHECK(ci.total.total() == whole_space(alg));
    CHECK(ci.is_ideal);

    auto with_o = fx::n2(Q, "b");
    auto co = class_ideal(with_o, connection_classes(with_o)[0]);
    CHECK(co.head == span_units(with_o, {1}));
    CHECK(co.body.total() == span_units(with_o, {0}));
    CHECK(co.total.total() == whole_space(with_o));

    auto pair = fx::n2_pair();
    auto first = class_ideal(pair, connection_classes(pair)[0]);
    CHECK(first.total.total() == span_units(pair, {0, 1}));
    CHECK(first.is_ideal);
    CHECK(first.is_subalgebra);
}

TEST_CASE("decompose: pinned examples") {
    SUBCASE("N2 + N2 without o is a direct sum of two ideals") {
        auto r = decompose(fx::n2_pair());
        CHECK(r.U.is_zero());
        CHECK(r.ideals.size() == 2);
        CHECK(r.direct);
        CHECK(find_check(r, "empty_o_gives_direct_sum").applicable);
        CHECK(find_check(r, "empty_o_gives_direct_sum").passed);
        CHECK(r.consistent());
    }
    SUBCASE("abelian labels give singleton ideals") {
        auto r = decompose(fx::abelian({"a", "b", "c"}));
        CHECK(r.ideals.size() == 3);
        for (const auto& ci : r.ideals) CHECK(ci.total.dim() == 1);
        CHECK(r.direct);
    }
    SUBCASE("N2 with o = b has one ideal equal to L") {
        auto alg = fx::n2(Q, "b");
        auto r = decompose(alg);
        CHECK(r.L_S_o == span_units(alg, {1}));
        CHECK(r.U.is_zero());
        REQUIRE(r.ideals.size() == 1);
        CHECK(r.ideals[0].total.total() == whole_space(alg));
        CHECK(r.consistent());
    }
}

TEST_CASE("an o-pair is joined through the distinguished label") {
    // Heisenberg with the centre as L_o: P * Q = {Z}; the chain {~Q, Z} reaches P.
    auto alg = fx::heisenberg(Q, "Z");
    REQUIRE(validate(alg).valid());
    StarTable t(alg);
    CHECK(verify_connection(t, "Q", "P", Chain{tilded("Q"), plain("Z")}));
    auto classes = connection_classes(alg);
    REQUIRE(classes.size() == 1);
    CHECK(o_pairs_connected(alg, classes));
    auto r = decompose(alg);
    REQUIRE(r.ideals.size() == 1);
    CHECK(r.ideals[0].head == span_units(alg, {2}));
    CHECK(r.ideals[0].total.total() == whole_space(alg));
    CHECK(r.consistent());
}

TEST_CASE("every pair with b * c = {o} is connected by {~c, o}") {
    std::size_t pairs = 0;
    for (const auto& e : standard_corpus()) {
        const auto& o = e.algebra.distinguished();
        if (!o) continue;
        StarTable t(e.algebra);
        for (const auto& b : t.labels())
            for (const auto& c : t.labels()) {
                if (b == *o || c == *o || t.star(plain(b), plain(c)) != LabelSet{*o}) continue;
                CAPTURE(e.name);
                CHECK(verify_connection(t, c, b, Chain{tilded(c), plain(*o)}));
                ++pairs;
            }
        CHECK(o_pairs_connected(e.algebra, connection_classes(e.algebra)));
    }
    CHECK(pairs > 0);
}

TEST_CASE("decompose: corpus-wide invariants") {
    for (const auto& e : standard_corpus()) {
        const auto& alg = e.algebra;
        auto r = decompose(alg);
        CAPTURE(e.name);
        CHECK(r.consistent());
        if (!r.o_pairs_connected) continue;
        Subspace total = r.U;
        std::size_t dims = r.U.dim();
        std::vector<Subspace> totals;
        for (const auto& ci : r.ideals) {
            totals.push_back(ci.total.total());
            CHECK(literal_ideal(alg, totals.back()));
            CHECK(totals.back().contains(ci.body.total()));
            CHECK(label_space(alg, alg.distinguished().value_or("")).contains(ci.head));
            total = sum(total, totals.back());
            dims += ci.total.dim();
        }
        CHECK(total == whole_space(alg));
        CHECK(r.direct == (dims == alg.dim()));
        for (std::size_t i = 0; i < totals.size(); ++i)
            for (std::size_t j = 0; j < totals.size(); ++j) {
                if (i == j) continue;
                for (const auto& u : totals[i].rows())
                    for (const auto& v : totals[j].rows()) CHECK(multiply(alg, u, v).is_zero());
            }
        if (!alg.distinguished()) CHECK(r.direct);
        if (center(alg).is_zero() && is_tight(alg)) CHECK(r.direct);
    }
}

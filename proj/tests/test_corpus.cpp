#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "sgl/corpus.hpp"
#include "sgl/errors.hpp"
#include "sgl/ideals.hpp"
#include "sgl/support_graph.hpp"

using namespace sgl;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

Subspace span_named(const Algebra& alg, std::initializer_list<const char*> names) {
    std::vector<Vector> rows;
    for (auto n : names) rows.push_back(alg.unit(*alg.index_of(n)));
    return Subspace::span(alg.field(), alg.dim(), rows);
}

}  // namespace

TEST_CASE("gen_abelian") {
    auto one = gen_abelian(Q, {{"a", {Parity::Even}}});
    CHECK(one.dim() == 1);
    CHECK(validate(one).valid());

    auto mixed = gen_abelian(F5, {{"a", {Parity::Even}}, {"b", {Parity::Odd}}, {"c", {Parity::Even, Parity::Odd}}});
    CHECK(validate(mixed).valid());
    CHECK(connection_classes(mixed).size() == 3);

    auto omitted = gen_abelian(Q, {{"a", {Parity::Even}}, {"b", {}}});
    CHECK(support(omitted).all == LabelSet{"a"});
}

TEST_CASE("gen_n2_family") {
    // k = 1 reproduces the hand-built N2 table.
    CHECK(gen_n2_family(1, Q) == fx::n2());

    auto two = gen_n2_family(2, Q);
    CHECK(validate(two).valid());
    CHECK(connection_classes(two).size() == 2);
    CHECK(frak_I(two).total() == span_named(two, {"y1", "y2"}));

    auto char2 = gen_n2_family(1, Field::prime(2));
    CHECK(validate(char2).valid());
    CHECK(frak_I(char2).is_zero());

    CHECK_THROWS_AS(gen_n2_family(0, Q), PreconditionError);
}

TEST_CASE("gen_hemisemidirect") {
    SUBCASE("1-dim abelian with a zero 1-dim module is 2-dim abelian") {
        auto g = lie_abelian(Q, 1);
        auto alg = gen_hemisemidirect(g, zero_action(g, 1), Parity::Even, {"m:1"});
        CHECK(alg.dim() == 2);
        CHECK(validate(alg).valid());
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(alg.product_terms(i, j).empty());
    }
    SUBCASE("[e, f] = f with an odd adjoint module: frak_I lies in the module") {
        auto g = lie_nonabelian2(F5);
        auto alg = gen_hemisemidirect(g, adjoint_action(g), Parity::Odd, {"m:e", "m:f"});
        CHECK(alg.dim() == 4);
        CHECK(validate(alg).valid());
        const auto module = sum(label_space(alg, "m:e"), label_space(alg, "m:f"));
        CHECK(module.contains(frak_I(alg).total()));
    }
    SUBCASE("zero action on a copy of g: frak_I holds the symmetrized module brackets") {
        auto g = lie_nonabelian2(Q);
        auto alg = gen_hemisemidirect(g, zero_action(g, 2), Parity::Even, {"m:1", "m:2"});
        const auto I = frak_I(alg).total();
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) CHECK(I.contains(symmetrized_bracket(alg, i, j)));
    }
    SUBCASE("an action violating the module law is rejected") {
        auto g = lie_nonabelian2(Q);
        // m . e = m, m . f = m do not commute as [e, f] = f requires.
        std::vector<Matrix> bad = {{{Q.one()}}, {{Q.one()}}};
        CHECK_THROWS_AS(gen_hemisemidirect(g, bad, Parity::Even, {"m"}), PreconditionError);
    }
}

TEST_CASE("gen_perturb") {
    const auto base = fx::n2();
    auto same = gen_perturb(base, 0, 7);
    CHECK(same.algebra == base);
    CHECK(same.expected_valid);

    // [x, x] = y + c x breaks the set grading for every nonzero c.
    auto broken = base;
    broken.set_product(0, 0, base.unit(0) + base.unit(1));
    auto report = validate(broken);
    REQUIRE_FALSE(report.valid());
    CHECK_FALSE(report.violations.front().witness.empty());

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto p = gen_perturb(base, 1, seed);
        CHECK(p.expected_valid == validate(p.algebra).valid());
    }
}

TEST_CASE("standard corpus: every entry validates and the family minimums are met") {
    std::map<std::string, std::size_t> by_family;
    std::size_t hsd_small_prime = 0;
    for (const auto& e : standard_corpus()) {
        CAPTURE(e.name);
        CHECK(validate(e.algebra).valid());
        ++by_family[e.family];
        const auto p = e.algebra.field().characteristic();
        hsd_small_prime += e.family == "Hemisemidirect" && (p == 5 || p == 7);
    }
    CHECK(by_family["Abelian"] >= 50);
    CHECK(by_family["N2Family"] >= 50);
    CHECK(hsd_small_prime >= 50);
    CHECK(by_family["Relabel"] >= 30);
    std::size_t total = 0;
    for (const auto& [_, n] : by_family) total += n;
    CHECK(total >= 180);
}

TEST_CASE("perturbed corpus: every entry fails validation with a witness") {
    const auto entries = perturbed_corpus();
    CHECK(entries.size() >= 20);
    for (const auto& e : entries) {
        CAPTURE(e.name);
        CHECK_FALSE(e.perturbed.expected_valid);
        auto r = validate(e.perturbed.algebra);
        REQUIRE_FALSE(r.valid());
        for (const auto& v : r.violations) CHECK((v.witness.size() == 2 || v.witness.size() == 3 || !v.labels.empty()));
    }
}

TEST_CASE("corpus generation is seed-reproducible") {
    const auto a = standard_corpus(3), b = standard_corpus(3), c = standard_corpus(4);
    REQUIRE(a.size() == b.size());
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].algebra == b[i].algebra);
        differs = differs || !(a[i].algebra == c[i].algebra);
    }
    // Rescaling factors depend on the seed.
    CHECK(differs);

    const auto pa = perturbed_corpus(2), pb = perturbed_corpus(2);
    REQUIRE(pa.size() == pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[i].perturbed.algebra == pb[i].perturbed.algebra);
}

TEST_CASE("rescaling and relabelling") {
    const auto base = fx::so3(F5);
    auto scaled = rescale(base, {F5.from_int(2), F5.from_int(3), F5.one()});
    CHECK(validate(scaled).valid());
    CHECK(connection_classes(scaled).size() == connection_classes(base).size());

    auto merged = relabel(base, {{"X", "XY"}, {"Y", "XY"}});
    CHECK(validate(merged).valid());
    CHECK(support(merged).all == LabelSet{"XY", "Z"});
}

#include "sgl/decomposer.hpp"

#include "sgl/errors.hpp"
#include "sgl/ideals.hpp"

namespace sgl {

namespace {

Subspace o_space(const Algebra& alg) {
    if (!alg.distinguished()) return Subspace(alg.field(), alg.dim());
    return label_space(alg, *alg.distinguished());
}

bool closed_under_basis(const Algebra& alg, const Subspace& w) {
    for (const auto& v : w.rows())
        for (std::size_t k = 0; k < alg.dim(); ++k)
            if (!w.contains(left_basis_product(alg, k, v)) || !w.contains(right_basis_product(alg, v, k))) return false;
    return true;
}

bool closed_under_self(const Algebra& alg, const Subspace& w) {
    for (const auto& u : w.rows())
        for (const auto& v : w.rows())
            if (!w.contains(multiply(alg, u, v))) return false;
    return true;
}

bool products_vanish(const Algebra& alg, const Subspace& a, const Subspace& b) {
    for (const auto& u : a.rows())
        for (const auto& v : b.rows())
            if (!multiply(alg, u, v).is_zero() || !multiply(alg, v, u).is_zero()) return false;
    return true;
}

std::string class_name(const ConnectionClass& c) {
    std::string s = "[";
    for (const auto& m : c.members) s += (s.size() > 1 ? "," : "") + m;
    return s + "]";
}

}  // namespace

bool o_pairs_connected(const Algebra& alg, const std::vector<ConnectionClass>& classes) {
    const auto& o = alg.distinguished();
    if (!o) return true;
    std::map<std::string, std::size_t> cls_of;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const auto& m : classes[i].members) cls_of[m] = i;
    StarTable table(alg);
    for (const auto& b : table.labels())
        for (const auto& c : table.labels()) {
            if (b == *o || c == *o || table.target(b, c) != *o) continue;
            if (cls_of.at(b) != cls_of.at(c)) return false;
        }
    return true;
}

Subspace class_head(const Algebra& alg, const ConnectionClass& cls) {
    Subspace lo = o_space(alg);
    if (lo.is_zero()) return lo;
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (!cls.members.contains(alg.element(i).label)) continue;
        for (std::size_t j = 0; j < alg.dim(); ++j)
            if (cls.members.contains(alg.element(j).label) && !alg.product_terms(i, j).empty())
                rows.push_back(alg.product(i, j));
    }
    return intersect(Subspace::span(alg.field(), alg.dim(), rows), lo);
}

namespace {

ClassIdeal build_class_ideal(const Algebra& alg, const ConnectionClass& cls, bool hypothesis) {
    ClassIdeal ci;
    ci.cls = cls;
    ci.head = class_head(alg, cls);
    ci.body = GradedSubspace(alg.field(), alg.dim());
    for (const auto& m : cls.members)
        for (Parity p : kParities) {
            Subspace piece = homogeneous_piece(alg, m, p);
            if (!piece.is_zero()) ci.body.set_piece({m, p}, piece);
        }
    Subspace total = sum(ci.head, ci.body.total());
    ci.total = GradedSubspace::from_subspace(alg, total);
    ci.is_subalgebra = closed_under_self(alg, total);
    ci.is_ideal = closed_under_basis(alg, total);
    if (hypothesis && !ci.is_ideal)
        throw InternalError("class ideal " + class_name(cls) + " is not an ideal although every o-pair is inside one class");
    return ci;
}

}  // namespace

ClassIdeal class_ideal(const Algebra& alg, const ConnectionClass& cls) {
    return build_class_ideal(alg, cls, o_pairs_connected(alg, connection_classes(alg)));
}

bool DecompositionReport::consistent() const {
    for (const auto& c : checks)
        if (c.applicable && !c.passed) return false;
    return true;
}

DecompositionReport decompose(const Algebra& alg) {
    DecompositionReport rep;
    const auto classes = connection_classes(alg);
    rep.o_pairs_connected = o_pairs_connected(alg, classes);
    const bool hyp = rep.o_pairs_connected;

    const Subspace lo = o_space(alg);
    rep.L_S_o = intersect(o_pair_span(alg), lo);
    rep.U = complement_in(rep.L_S_o, lo);

    for (const auto& c : classes) rep.ideals.push_back(build_class_ideal(alg, c, false));

    Subspace all = rep.U;
    Subspace heads(alg.field(), alg.dim());
    std::size_t dim_sum = rep.U.dim();
    bool all_ideal = true, all_sub = true;
    for (const auto& ci : rep.ideals) {
        Subspace t = ci.total.total();
        all = sum(all, t);
        heads = sum(heads, ci.head);
        dim_sum += t.dim();
        all_ideal &= ci.is_ideal;
        all_sub &= ci.is_subalgebra;
    }
    const bool reconstitutes = all.dim() == alg.dim();
    rep.direct = reconstitutes && dim_sum == alg.dim();

    bool cross_zero = true;
    for (std::size_t i = 0; i < rep.ideals.size(); ++i)
        for (std::size_t j = i + 1; j < rep.ideals.size(); ++j)
            cross_zero &= products_vanish(alg, rep.ideals[i].total.total(), rep.ideals[j].total.total());

    rep.checks.push_back({"class_ideals_are_subalgebras", true, all_sub, "every L_[a] is closed under the product"});
    rep.checks.push_back({"class_ideals_are_ideals", hyp, all_ideal, "[L_[a], L] + [L, L_[a]] <= L_[a]"});
    rep.checks.push_back({"sum_reconstitutes_L", hyp, reconstitutes, "U + sum of L_[a] = L"});
    rep.checks.push_back({"cross_class_products_vanish", hyp, cross_zero, "[I_[a], I_[t]] = 0 for distinct classes"});
    rep.checks.push_back({"L_S_o_is_sum_of_heads", hyp, heads == rep.L_S_o, "L_S,o = sum of L_[a],o"});

    const bool no_o = !alg.distinguished();
    rep.checks.push_back({"empty_o_gives_direct_sum", no_o, rep.U.is_zero() && rep.direct, "o empty: U = 0 and the sum is direct"});
    const bool co1_hyp = hyp && center(alg).is_zero() && is_tight(alg);
    rep.checks.push_back({"centerless_tight_gives_direct_sum", co1_hyp, rep.U.is_zero() && rep.direct,
                          "centerless with tight L_o: U = 0 and the sum is direct"});
    return rep;
}

}  // namespace sgl

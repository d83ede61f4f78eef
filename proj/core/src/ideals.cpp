#include "sgl/ideals.hpp"

#include <random>

#include "sgl/errors.hpp"
#include "sgl/support_graph.hpp"

namespace sgl {

namespace {

Subspace line(const Algebra& alg, const Vector& v) {
    return Subspace::span(alg.field(), alg.dim(), std::span<const Vector>(&v, 1));
}

// Closure of an arbitrary subspace under left and right multiplication by
// basis vectors. Worklist holds the rows added in the previous sweep.
Subspace close_plain(const Algebra& alg, Subspace s) {
    std::vector<Vector> frontier = s.rows();
    while (!frontier.empty()) {
        std::vector<Vector> next;
        for (const auto& v : frontier)
            for (std::size_t k = 0; k < alg.dim(); ++k)
                for (Vector w : {left_basis_product(alg, k, v), right_basis_product(alg, v, k)}) {
                    w = s.reduce(std::move(w));
                    if (w.is_zero()) continue;
                    s = sum(s, line(alg, w));
                    next.push_back(std::move(w));
                }
        frontier = std::move(next);
    }
    return s;
}

Cell require_cell(const Algebra& alg, const Vector& v, const char* what) {
    auto c = cell_of(alg, v);
    if (!c) throw PreconditionError(std::string(what) + " is not homogeneous");
    return *c;
}

// Images x -> ([x, e_k], [e_k, x]) for k in `against`, one row per basis vector.
Subspace annihilator_of(const Algebra& alg, const std::vector<std::size_t>& against) {
    if (against.empty()) return whole_space(alg);
    std::vector<Vector> images;
    images.reserve(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        std::vector<Scalar> coords;
        coords.reserve(2 * against.size() * alg.dim());
        for (std::size_t k : against) {
            Vector l = alg.product(i, k);
            Vector r = alg.product(k, i);
            coords.insert(coords.end(), l.coords().begin(), l.coords().end());
            coords.insert(coords.end(), r.coords().begin(), r.coords().end());
        }
        images.emplace_back(alg.field(), std::move(coords));
    }
    return kernel(alg.field(), images);
}

}  // namespace

IdealClosureResult ideal_closure(const Algebra& alg, const GradedSubspace& v) {
    if (!(v.field() == alg.field()) || v.ambient() != alg.dim()) throw MismatchError("ideal_closure: subspace outside the algebra");
    IdealClosureResult res;
    res.subspace = v;
    std::vector<std::pair<Cell, Vector>> frontier;
    for (const auto& [cell, piece] : v.pieces())
        for (const auto& r : piece.rows()) {
            frontier.emplace_back(cell, r);
            res.generators.push_back(r);
        }
    while (!frontier.empty()) {
        std::vector<std::pair<Cell, Vector>> next;
        for (const auto& [cell, x] : frontier)
            for (std::size_t k = 0; k < alg.dim(); ++k)
                for (const Vector& w : {left_basis_product(alg, k, x), right_basis_product(alg, x, k)}) {
                    if (w.is_zero()) continue;
                    auto c = cell_of(alg, w);
                    if (!c) throw InternalError("product of homogeneous elements is not homogeneous");
                    Vector red = res.subspace.piece(*c).reduce(w);
                    if (red.is_zero()) continue;
                    res.subspace.add(*c, red);
                    next.emplace_back(*c, std::move(red));
                }
        if (!next.empty()) ++res.iterations;
        frontier = std::move(next);
    }
    return res;
}

IdealClosureResult ideal_closure(const Algebra& alg, std::span<const Vector> generators) {
    GradedSubspace g(alg.field(), alg.dim());
    for (const auto& v : generators) {
        if (!(v.field() == alg.field()) || v.dim() != alg.dim()) throw MismatchError("ideal_closure: generator outside the algebra");
        if (v.is_zero()) continue;
        g.add(require_cell(alg, v, "generator"), v);
    }
    auto res = ideal_closure(alg, g);
    res.generators.assign(generators.begin(), generators.end());
    return res;
}

GradedSubspace frak_I(const Algebra& alg) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j) {
            Vector s = symmetrized_bracket(alg, i, j);
            if (!s.is_zero()) gens.push_back(std::move(s));
        }
    Subspace closed = close_plain(alg, Subspace::span(alg.field(), alg.dim(), gens));
    GradedSubspace out;
    try {
        out = GradedSubspace::from_subspace(alg, closed);
    } catch (const PreconditionError&) {
        throw PreconditionError("the ideal generated by the symmetrized brackets is not graded");
    }
    for (const auto& v : closed.rows())
        for (std::size_t k = 0; k < alg.dim(); ++k)
            if (!left_basis_product(alg, k, v).is_zero())
                throw InternalError("[L, frak_I] != 0 on a validated algebra");
    return out;
}

Subspace center(const Algebra& alg) {
    std::vector<std::size_t> all(alg.dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return annihilator_of(alg, all);
}

Subspace lie_annihilator(const Algebra& alg, bool include_o) {
    GradedSubspace ideal = frak_I(alg);
    std::set<std::string> in_ideal;
    for (const auto& [cell, piece] : ideal.pieces()) in_ideal.insert(cell.label);
    std::vector<std::size_t> against;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        const auto& label = alg.element(i).label;
        if (in_ideal.contains(label)) continue;
        if (!include_o && alg.is_distinguished(label)) continue;
        against.push_back(i);
    }
    return annihilator_of(alg, against);
}

Subspace o_pair_span(const Algebra& alg) {
    Subspace out(alg.field(), alg.dim());
    const auto& o = alg.distinguished();
    if (!o) return out;
    StarTable table(alg);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            const auto& a = alg.element(i).label;
            const auto& b = alg.element(j).label;
            if (a == *o || b == *o || table.target(a, b) != *o) continue;
            if (!alg.product_terms(i, j).empty()) rows.push_back(alg.product(i, j));
        }
    return Subspace::span(alg.field(), alg.dim(), rows);
}

bool is_tight(const Algebra& alg) {
    if (!alg.distinguished()) return true;
    Subspace lo = label_space(alg, *alg.distinguished());
    return lo.is_zero() || o_pair_span(alg) == lo;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Simple: return "Simple";
        case Verdict::NotSimple: return "NotSimple";
        case Verdict::ProbablySimple: return "ProbablySimple";
    }
    return "?";
}

namespace {

std::vector<Vector> projective_points(const Algebra& alg, const Subspace& piece) {
    const auto p = static_cast<long long>(alg.field().characteristic());
    const std::size_t d = piece.dim();
    std::vector<Vector> out;
    for (std::size_t lead = 0; lead < d; ++lead) {
        const std::size_t free = d - 1 - lead;
        std::vector<long long> c(free, 0);
        while (true) {
            Vector v = piece.rows()[lead];
            for (std::size_t t = 0; t < free; ++t)
                if (c[t]) v.add_scaled(alg.field().from_int(c[t]), piece.rows()[lead + 1 + t]);
            out.push_back(std::move(v));
            std::size_t t = 0;
            while (t < free && ++c[t] == p) c[t++] = 0;
            if (t == free) break;
        }
    }
    return out;
}

std::size_t projective_count(std::size_t p, std::size_t d, std::size_t cap) {
    std::size_t total = 0, pw = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total += pw;
        if (total > cap) return cap + 1;
        if (pw > cap) return cap + 1;
        pw *= p;
    }
    return total;
}

}  // namespace

SimplicityVerdict simplicity_oracle(const Algebra& alg, const OracleOptions& opts) {
    SimplicityVerdict out;
    bool square_zero = true;
    for (std::size_t i = 0; i < alg.dim() && square_zero; ++i)
        for (std::size_t j = 0; j < alg.dim() && square_zero; ++j) square_zero = alg.product_terms(i, j).empty();
    if (square_zero) {
        out.reason = "[L, L] = 0";
        if (alg.dim() >= 2) {
            GradedSubspace w(alg.field(), alg.dim());
            w.add(alg.cell_of(0), alg.unit(0));
            out.witness = std::move(w);
        }
        return out;
    }

    const GradedSubspace ideal = frak_I(alg);
    const Subspace ideal_total = ideal.total();
    const std::size_t n = alg.dim();
    std::mt19937_64 rng(opts.seed);

    std::set<Cell> cells;
    for (std::size_t i = 0; i < n; ++i) cells.insert(alg.cell_of(i));

    auto check = [&](const Cell& cell, const Vector& v) -> bool {
        ++out.vectors_tested;
        GradedSubspace g(alg.field(), n);
        g.add(cell, v);
        auto closure = ideal_closure(alg, g).subspace;
        const bool in_ideal = ideal_total.contains(v);
        const std::size_t want = in_ideal ? ideal_total.dim() : n;
        if (closure.dim() == want) return true;
        out.verdict = Verdict::NotSimple;
        out.reason = std::string("closure of a homogeneous vector in ") + to_string(cell) + " is a proper ideal";
        out.witness = std::move(closure);
        return false;
    };

    for (const auto& cell : cells) {
        Subspace piece = homogeneous_piece(alg, cell.label, cell.parity);
        const std::size_t d = piece.dim();
        std::vector<Vector> tests;
        bool sampled = false;
        if (d == 1) {
            tests = piece.rows();
        } else if (!alg.field().is_rational() &&
                   projective_count(alg.field().characteristic(), d, opts.enumeration_limit) <= opts.enumeration_limit) {
            tests = projective_points(alg, piece);
        } else {
            sampled = true;
            tests = piece.rows();
            const long long range = alg.field().is_rational() ? 9 : static_cast<long long>(alg.field().characteristic());
            std::uniform_int_distribution<long long> dist(alg.field().is_rational() ? -range : 0,
                                                          alg.field().is_rational() ? range : range - 1);
            for (std::size_t s = 0; s < opts.samples; ++s) {
                Vector v = alg.zero_vector();
                for (const auto& r : piece.rows()) v.add_scaled(alg.field().from_int(dist(rng)), r);
                if (!v.is_zero()) tests.push_back(std::move(v));
            }
        }
        out.sampled |= sampled;
        for (const auto& v : tests)
            if (!check(cell, v)) return out;
    }
    out.verdict = out.sampled ? Verdict::ProbablySimple : Verdict::Simple;
    out.reason = out.sampled ? "no proper ideal among sampled generators" : "every homogeneous generator closes to frak_I or L";
    return out;
}

}  // namespace sgl

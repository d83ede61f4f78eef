#include "sgl/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "sgl/errors.hpp"

namespace sgl {

std::string to_string(const Cell& c) { return c.label + (c.parity == Parity::Even ? "^0" : "^1"); }

Algebra::Algebra(Field field, std::vector<BasisElement> basis, std::optional<std::string> distinguished)
    : field_(field), basis_(std::move(basis)), distinguished_(std::move(distinguished)) {
    std::set<std::string> names;
    for (const auto& b : basis_) {
        if (b.name.empty()) throw PreconditionError("basis element with empty name");
        if (b.label.empty()) throw PreconditionError("basis element '" + b.name + "' has an empty label");
        if (!names.insert(b.name).second) throw PreconditionError("duplicate basis name '" + b.name + "'");
    }
    if (distinguished_ && distinguished_->empty()) throw PreconditionError("distinguished label must be nonempty");
    table_.assign(basis_.size() * basis_.size(), {});
}

std::optional<std::size_t> Algebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return i;
    return std::nullopt;
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vector& v) {
    if (i >= dim() || j >= dim()) throw PreconditionError("product index out of range");
    if (!(v.field() == field_) || v.dim() != dim()) throw MismatchError("product vector does not live in the algebra");
    auto& entry = table_[i * dim() + j];
    entry.clear();
    for (std::size_t k = 0; k < v.dim(); ++k)
        if (!v[k].is_zero()) entry.push_back({k, v[k]});
}

Vector Algebra::product(std::size_t i, std::size_t j) const {
    Vector v = zero_vector();
    for (const auto& t : product_terms(i, j)) v[t.index] = t.coeff;
    return v;
}

std::vector<std::string> Algebra::labels() const {
    std::set<std::string> s;
    for (const auto& b : basis_) s.insert(b.label);
    return {s.begin(), s.end()};
}

std::vector<std::size_t> Algebra::indices_with_label(const std::string& label) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) out.push_back(i);
    return out;
}

std::vector<std::size_t> Algebra::indices_in_cell(const Cell& cell) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == cell.label && basis_[i].parity == cell.parity) out.push_back(i);
    return out;
}

bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.basis_ == b.basis_ && a.distinguished_ == b.distinguished_ && a.table_ == b.table_;
}

Vector multiply(const Algebra& alg, const Vector& u, const Vector& v) {
    if (!(u.field() == alg.field()) || u.dim() != alg.dim()) throw MismatchError("multiply: left operand outside the algebra");
    if (!(v.field() == alg.field()) || v.dim() != alg.dim()) throw MismatchError("multiply: right operand outside the algebra");
    Vector out = alg.zero_vector();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (v[j].is_zero()) continue;
            const auto& terms = alg.product_terms(i, j);
            if (terms.empty()) continue;
            Scalar c = u[i] * v[j];
            for (const auto& t : terms) out[t.index] += c * t.coeff;
        }
    }
    return out;
}

Vector left_basis_product(const Algebra& alg, std::size_t i, const Vector& v) {
    Vector out = alg.zero_vector();
    for (std::size_t j = 0; j < alg.dim(); ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& t : alg.product_terms(i, j)) out[t.index] += v[j] * t.coeff;
    }
    return out;
}

Vector right_basis_product(const Algebra& alg, const Vector& v, std::size_t i) {
    Vector out = alg.zero_vector();
    for (std::size_t j = 0; j < alg.dim(); ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& t : alg.product_terms(j, i)) out[t.index] += v[j] * t.coeff;
    }
    return out;
}

namespace {

Subspace span_of_indices(const Algebra& alg, const std::vector<std::size_t>& idx) {
    std::vector<Vector> rows;
    for (auto i : idx) rows.push_back(alg.unit(i));
    return Subspace::span(alg.field(), alg.dim(), rows);
}

}  // namespace

Subspace homogeneous_piece(const Algebra& alg, const std::string& label, Parity parity) {
    return span_of_indices(alg, alg.indices_in_cell({label, parity}));
}

Subspace label_space(const Algebra& alg, const std::string& label) {
    return span_of_indices(alg, alg.indices_with_label(label));
}

Subspace whole_space(const Algebra& alg) { return Subspace::full(alg.field(), alg.dim()); }

std::optional<Cell> cell_of(const Algebra& alg, const Vector& v) {
    std::optional<Cell> cell;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i].is_zero()) continue;
        Cell c = alg.cell_of(i);
        if (cell && !(*cell == c)) return std::nullopt;
        cell = c;
    }
    return cell;
}

std::set<std::string> product_target_labels(const Algebra& alg, const std::string& a, const std::string& b) {
    std::set<std::string> out;
    for (auto i : alg.indices_with_label(a))
        for (auto j : alg.indices_with_label(b))
            for (const auto& t : alg.product_terms(i, j)) out.insert(alg.element(t.index).label);
    return out;
}

GradedSubspace GradedSubspace::from_subspace(const Algebra& alg, const Subspace& s) {
    GradedSubspace g(alg.field(), alg.dim());
    std::set<Cell> cells;
    for (std::size_t i = 0; i < alg.dim(); ++i) cells.insert(alg.cell_of(i));
    std::size_t total = 0;
    for (const auto& c : cells) {
        Subspace piece = intersect(s, homogeneous_piece(alg, c.label, c.parity));
        total += piece.dim();
        if (!piece.is_zero()) g.pieces_.emplace(c, std::move(piece));
    }
    if (total != s.dim()) throw PreconditionError("subspace is not graded by the (label, parity) cells");
    return g;
}

Subspace GradedSubspace::piece(const Cell& cell) const {
    auto it = pieces_.find(cell);
    return it == pieces_.end() ? Subspace(field_, ambient_) : it->second;
}

Subspace GradedSubspace::total() const {
    std::vector<Vector> rows;
    for (const auto& [cell, s] : pieces_) rows.insert(rows.end(), s.rows().begin(), s.rows().end());
    return Subspace::span(field_, ambient_, rows);
}

std::size_t GradedSubspace::dim() const {
    std::size_t d = 0;
    for (const auto& [cell, s] : pieces_) d += s.dim();
    return d;
}

bool GradedSubspace::add(const Cell& cell, const Vector& v) {
    auto it = pieces_.find(cell);
    if (it == pieces_.end()) it = pieces_.emplace(cell, Subspace(field_, ambient_)).first;
    if (it->second.contains(v)) return false;
    std::vector<Vector> rows = it->second.rows();
    rows.push_back(v);
    it->second = Subspace::span(field_, ambient_, rows);
    return true;
}

void GradedSubspace::set_piece(const Cell& cell, Subspace s) {
    if (s.is_zero()) {
        pieces_.erase(cell);
    } else {
        pieces_[cell] = std::move(s);
    }
}

std::string to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::Parity: return "parity";
        case Violation::Kind::SetGrading: return "set-grading";
        case Violation::Kind::SuperLeibniz: return "super-leibniz";
        case Violation::Kind::Distinguished: return "distinguished";
    }
    return "?";
}

namespace {

std::string name_list(const Algebra& alg, std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (auto i : idx) {
        s += (first ? "" : ",") + alg.element(i).name;
        first = false;
    }
    return s + ")";
}

// Dense products so the triple loop does not re-expand sparse rows.
std::vector<Vector> dense_table(const Algebra& alg) {
    std::vector<Vector> t;
    t.reserve(alg.dim() * alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) t.push_back(alg.product(i, j));
    return t;
}

}  // namespace

ValidationReport validate(const Algebra& alg) {
    ValidationReport report;
    const std::size_t n = alg.dim();
    if (alg.char2_degenerate()) report.warnings.push_back("characteristic 2: super signs collapse");

    // Z2 compatibility.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Parity expect = alg.element(i).parity + alg.element(j).parity;
            for (const auto& t : alg.product_terms(i, j))
                if (alg.element(t.index).parity != expect) {
                    report.violations.push_back({Violation::Kind::Parity,
                                                 "[" + alg.element(i).name + "," + alg.element(j).name + "] has a component on " +
                                                     alg.element(t.index).name + " of the wrong parity",
                                                 {i, j},
                                                 {}});
                    break;
                }
        }

    // Set grading: per ordered label pair, at most one target label.
    auto labels = alg.labels();
    for (const auto& a : labels)
        for (const auto& b : labels) {
            auto targets = product_target_labels(alg, a, b);
            if (targets.size() <= 1) continue;
            // Witness: a single product spanning two labels if there is one,
            // otherwise the first product leaving the first target label.
            std::optional<std::pair<std::size_t, std::size_t>> split, leaving;
            const std::string& first = *targets.begin();
            for (auto i : alg.indices_with_label(a))
                for (auto j : alg.indices_with_label(b)) {
                    std::set<std::string> own;
                    for (const auto& t : alg.product_terms(i, j)) own.insert(alg.element(t.index).label);
                    if (!split && own.size() > 1) split = {i, j};
                    if (!leaving && !own.empty() && !own.contains(first)) leaving = {i, j};
                }
            auto [wi, wj] = split ? *split : *leaving;
            std::string lst;
            for (const auto& t : targets) lst += (lst.empty() ? "" : ",") + t;
            report.violations.push_back({Violation::Kind::SetGrading,
                                         "[L_" + a + ", L_" + b + "] spans components {" + lst + "}",
                                         {wi, wj},
                                         {a, b}});
        }

    // Super Leibniz on basis triples:
    // [x,[y,z]] - [[x,y],z] + (-1)^{|y||z|} [[x,z],y] = 0
    auto dense = dense_table(alg);
    auto at = [&](std::size_t i, std::size_t j) -> const Vector& { return dense[i * n + j]; };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vector acc = alg.zero_vector();
                for (const auto& t : alg.product_terms(y, z)) acc.add_scaled(t.coeff, at(x, t.index));
                for (const auto& t : alg.product_terms(x, y)) acc.add_scaled(-t.coeff, at(t.index, z));
                bool odd = alg.element(y).parity == Parity::Odd && alg.element(z).parity == Parity::Odd;
                for (const auto& t : alg.product_terms(x, z)) acc.add_scaled(odd ? -t.coeff : t.coeff, at(t.index, y));
                if (!acc.is_zero())
                    report.violations.push_back({Violation::Kind::SuperLeibniz,
                                                 "super Leibniz identity fails on " + name_list(alg, {x, y, z}),
                                                 {x, y, z},
                                                 {}});
            }

    if (const auto& o = alg.distinguished()) {
        if (std::find(labels.begin(), labels.end(), *o) == labels.end()) {
            report.violations.push_back(
                {Violation::Kind::Distinguished, "distinguished label '" + *o + "' is not in the support", {}, {*o}});
        } else {
            for (const auto& a : labels) {
                if (a == *o) continue;
                auto t = product_target_labels(alg, *o, a);
                if (t.size() == 1 && *t.begin() == *o)
                    report.violations.push_back({Violation::Kind::Distinguished,
                                                 "distinguished label '" + *o + "' satisfies o * " + a + " = {o}",
                                                 {},
                                                 {*o, a}});
            }
        }
    }
    return report;
}

void require_valid(const Algebra& alg) {
    auto r = validate(alg);
    if (!r.valid()) throw PreconditionError("algebra is not valid: " + r.violations.front().message);
}

Vector symmetrized_bracket(const Algebra& alg, std::size_t i, std::size_t j) {
    Vector v = alg.product(i, j);
    bool odd = alg.element(i).parity == Parity::Odd && alg.element(j).parity == Parity::Odd;
    Vector w = alg.product(j, i);
    v.add_scaled(odd ? -alg.field().one() : alg.field().one(), w);
    return v;
}

bool is_lie_superalgebra(const Algebra& alg) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j)
            if (!symmetrized_bracket(alg, i, j).is_zero()) return false;
    return true;
}

}  // namespace sgl

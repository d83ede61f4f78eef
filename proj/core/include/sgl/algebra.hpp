#pragma once

// Set-graded Leibniz superalgebras given by structure constants.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgl/field.hpp"
#include "sgl/linalg.hpp"

namespace sgl {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr int to_int(Parity p) { return static_cast<int>(p); }
constexpr Parity parity_from_int(int v) { return v % 2 ? Parity::Odd : Parity::Even; }
constexpr Parity kParities[] = {Parity::Even, Parity::Odd};

struct BasisElement {
    std::string name;
    std::string label;
    Parity parity = Parity::Even;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// A homogeneous (label, parity) component L_a^i.
struct Cell {
    std::string label;
    Parity parity = Parity::Even;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

struct Term {
    std::size_t index;
    Scalar coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Basis, sparse multiplication table and optional distinguished label.
/// Construction checks only structure (names, labels, indices, field);
/// the algebra axioms are checked by validate().
class Algebra {
public:
    Algebra() = default;
    Algebra(Field field, std::vector<BasisElement> basis, std::optional<std::string> distinguished = std::nullopt);

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    const BasisElement& element(std::size_t i) const { return basis_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    const std::optional<std::string>& distinguished() const noexcept { return distinguished_; }
    void set_distinguished(std::optional<std::string> label) { distinguished_ = std::move(label); }
    bool is_distinguished(const std::string& label) const { return distinguished_ && *distinguished_ == label; }

    /// [e_i, e_j] := v. A zero vector clears the entry.
    void set_product(std::size_t i, std::size_t j, const Vector& v);
    /// Nonzero coordinates of [e_i, e_j], ascending by index.
    const std::vector<Term>& product_terms(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
    Vector product(std::size_t i, std::size_t j) const;

    /// Labels carried by at least one basis element, sorted.
    std::vector<std::string> labels() const;
    std::vector<std::size_t> indices_with_label(const std::string& label) const;
    std::vector<std::size_t> indices_in_cell(const Cell& cell) const;
    Cell cell_of(std::size_t i) const { return {basis_[i].label, basis_[i].parity}; }

    /// Characteristic 2: superalgebra sign factors collapse.
    bool char2_degenerate() const noexcept { return field_.characteristic() == 2; }

    Vector zero_vector() const { return Vector(field_, dim()); }
    Vector unit(std::size_t i) const { return Vector::unit(field_, dim(), i); }

    friend bool operator==(const Algebra& a, const Algebra& b);

private:
    Field field_;
    std::vector<BasisElement> basis_;
    std::optional<std::string> distinguished_;
    std::vector<std::vector<Term>> table_;
};

/// Bilinear product [u, v].
Vector multiply(const Algebra& alg, const Vector& u, const Vector& v);
/// [e_i, v] and [v, e_i].
Vector left_basis_product(const Algebra& alg, std::size_t i, const Vector& v);
Vector right_basis_product(const Algebra& alg, const Vector& v, std::size_t i);

/// L_a^i as a subspace of the algebra (zero when the cell is empty).
Subspace homogeneous_piece(const Algebra& alg, const std::string& label, Parity parity);
/// L_a.
Subspace label_space(const Algebra& alg, const std::string& label);
Subspace whole_space(const Algebra& alg);
/// The cell a nonzero homogeneous vector lives in; nullopt for zero or mixed vectors.
std::optional<Cell> cell_of(const Algebra& alg, const Vector& v);

/// Labels hit by nonzero coordinates of [L_a, L_b]. A valid set grading
/// makes this empty or a singleton.
std::set<std::string> product_target_labels(const Algebra& alg, const std::string& a, const std::string& b);

/// A subspace stored as its per-cell pieces. The total is the direct sum.
class GradedSubspace {
public:
    GradedSubspace() = default;
    GradedSubspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

    /// Splits a subspace into its cell pieces; throws PreconditionError when the
    /// subspace is not the direct sum of its intersections with the cells.
    static GradedSubspace from_subspace(const Algebra& alg, const Subspace& s);

    Field field() const noexcept { return field_; }
    std::size_t ambient() const noexcept { return ambient_; }
    const std::map<Cell, Subspace>& pieces() const noexcept { return pieces_; }
    /// Zero subspace for absent cells.
    Subspace piece(const Cell& cell) const;
    Subspace total() const;
    std::size_t dim() const;
    bool is_zero() const { return dim() == 0; }

    /// Adds v to the piece of `cell`; returns true when the piece grew.
    bool add(const Cell& cell, const Vector& v);
    void set_piece(const Cell& cell, Subspace s);

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) { return a.total() == b.total(); }

private:
    Field field_;
    std::size_t ambient_ = 0;
    std::map<Cell, Subspace> pieces_;
};

struct Violation {
    enum class Kind { Parity, SetGrading, SuperLeibniz, Distinguished };
    Kind kind;
    std::string message;
    std::vector<std::size_t> witness;  ///< basis indices (pair or triple)
    std::vector<std::string> labels;   ///< offending labels, when relevant
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;

    bool valid() const noexcept { return violations.empty(); }
};

/// Checks Z2-compatibility of products, the set-grading axiom on every
/// ordered label pair, the super Leibniz identity on all basis triples,
/// and the constraints on the distinguished label.
ValidationReport validate(const Algebra& alg);
/// Throws PreconditionError listing the first violation.
void require_valid(const Algebra& alg);

/// [x,y] = -(-1)^{|x||y|}[y,x] on all basis pairs.
bool is_lie_superalgebra(const Algebra& alg);

/// [e_i, e_j] + (-1)^{|e_i||e_j|}[e_j, e_i]
Vector symmetrized_bracket(const Algebra& alg, std::size_t i, std::size_t j);

}  // namespace sgl

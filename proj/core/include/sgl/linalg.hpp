#pragma once

// Dense vectors and canonical (RREF) subspaces over an exact field.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "sgl/field.hpp"

namespace sgl {

class Vector {
public:
    Vector() = default;
    Vector(Field field, std::size_t dim) : field_(field), coords_(dim, field.zero()) {}
    Vector(Field field, std::vector<Scalar> coords);

    static Vector unit(Field field, std::size_t dim, std::size_t index);
    /// Convenience for tests and generators.
    static Vector from_ints(Field field, std::initializer_list<long long> values);

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    /// Index of the first nonzero coordinate, or dim() for the zero vector.
    std::size_t leading_index() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& s);
    /// this += s * o
    void add_scaled(const Scalar& s, const Vector& o);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }

    friend bool operator==(const Vector& a, const Vector& b);

    /// Throws MismatchError unless field and dimension agree.
    void require_compatible(const Vector& o) const;

private:
    Field field_;
    std::vector<Scalar> coords_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

/// A linear subspace stored as its reduced row echelon basis. Two values
/// compare equal exactly when they are the same subspace.
class Subspace {
public:
    Subspace() = default;
    /// The zero subspace of an ambient space.
    Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

    /// Span of `rows`; every row must have the given field and dimension.
    static Subspace span(Field field, std::size_t ambient, std::span<const Vector> rows);
    static Subspace full(Field field, std::size_t ambient);

    Field field() const noexcept { return field_; }
    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    bool is_zero() const noexcept { return rows_.empty(); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Residue of v after elimination against the RREF rows.
    Vector reduce(Vector v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

    void require_compatible(const Subspace& o) const;

private:
    Field field_;
    std::size_t ambient_ = 0;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Canonical RREF of the span. Requires a nonempty list (the field and
/// dimension come from the first row); use Subspace::span otherwise.
Subspace rref(std::span<const Vector> rows);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// C with a (+) C = b, built by walking b's RREF rows in order and keeping each
/// row that is independent of a and the rows kept so far. Requires a <= b.
Subspace complement_in(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);

/// Kernel of the linear map sending the i-th standard basis vector of
/// K^images.size() to images[i]. All images share one field and length.
Subspace kernel(Field field, std::span<const Vector> images);

std::ostream& operator<<(std::ostream& os, const Subspace& s);

}  // namespace sgl

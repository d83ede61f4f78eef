#include "sgl/linalg.hpp"

#include <ostream>
#include <string>

#include "sgl/errors.hpp"

namespace sgl {

Vector::Vector(Field field, std::vector<Scalar> coords) : field_(field), coords_(std::move(coords)) {
    for (const auto& c : coords_)
        if (!(c.field() == field_)) throw MismatchError("vector coordinate over " + c.field().name() + " in " + field_.name() + " vector");
}

Vector Vector::unit(Field field, std::size_t dim, std::size_t index) {
    Vector v(field, dim);
    v[index] = field.one();
    return v;
}

Vector Vector::from_ints(Field field, std::initializer_list<long long> values) {
    std::vector<Scalar> coords;
    coords.reserve(values.size());
    for (long long x : values) coords.push_back(field.from_int(x));
    return Vector(field, std::move(coords));
}

bool Vector::is_zero() const { return leading_index() == coords_.size(); }

std::size_t Vector::leading_index() const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return i;
    return coords_.size();
}

void Vector::require_compatible(const Vector& o) const {
    if (!(field_ == o.field_)) throw MismatchError("vector field mismatch: " + field_.name() + " vs " + o.field_.name());
    if (dim() != o.dim())
        throw MismatchError("vector dimension mismatch: " + std::to_string(dim()) + " vs " + std::to_string(o.dim()));
}

Vector& Vector::operator+=(const Vector& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!o.coords_[i].is_zero()) coords_[i] -= o.coords_[i];
    return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
    for (auto& c : coords_)
        if (!c.is_zero()) c *= s;
    return *this;
}

void Vector::add_scaled(const Scalar& s, const Vector& o) {
    require_compatible(o);
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!o.coords_[i].is_zero()) coords_[i] += s * o.coords_[i];
}

bool operator==(const Vector& a, const Vector& b) {
    a.require_compatible(b);
    return a.coords_ == b.coords_;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

namespace {

// In-place Gauss-Jordan on rows; drops zero rows, returns pivot columns.
// Only the first `width` columns are considered for pivots.
std::vector<std::size_t> gauss_jordan(std::vector<Vector>& rows, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        rows[r] *= rows[r][col].inverse();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            Scalar f = -rows[i][col];
            rows[i].add_scaled(f, rows[r]);
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

Vector concat(const Vector& a, const Vector& b) {
    std::vector<Scalar> c = a.coords();
    c.insert(c.end(), b.coords().begin(), b.coords().end());
    return Vector(a.field(), std::move(c));
}

Vector tail(const Vector& v, std::size_t from) {
    return Vector(v.field(), std::vector<Scalar>(v.coords().begin() + static_cast<std::ptrdiff_t>(from), v.coords().end()));
}

}  // namespace

Subspace Subspace::span(Field field, std::size_t ambient, std::span<const Vector> rows) {
    Subspace s(field, ambient);
    std::vector<Vector> work;
    work.reserve(rows.size());
    for (const auto& v : rows) {
        if (!(v.field() == field) || v.dim() != ambient)
            throw MismatchError("span: row over " + v.field().name() + " of length " + std::to_string(v.dim()) +
                                " in " + field.name() + "^" + std::to_string(ambient));
        if (!v.is_zero()) work.push_back(v);
    }
    s.pivots_ = gauss_jordan(work, ambient);
    s.rows_ = std::move(work);
    return s;
}

Subspace Subspace::full(Field field, std::size_t ambient) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(Vector::unit(field, ambient, i));
    return span(field, ambient, rows);
}

void Subspace::require_compatible(const Subspace& o) const {
    if (!(field_ == o.field_) || ambient_ != o.ambient_)
        throw MismatchError("subspace mismatch: " + field_.name() + "^" + std::to_string(ambient_) + " vs " +
                            o.field_.name() + "^" + std::to_string(o.ambient_));
}

Vector Subspace::reduce(Vector v) const {
    if (!(v.field() == field_) || v.dim() != ambient_) throw MismatchError("vector does not live in this ambient space");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = v[pivots_[i]];
        if (!c.is_zero()) v.add_scaled(-c, rows_[i]);
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
    require_compatible(other);
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    a.require_compatible(b);
    if (a.pivots_ != b.pivots_) return false;
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
        if (!(a.rows_[i] == b.rows_[i])) return false;
    return true;
}

Subspace rref(std::span<const Vector> rows) {
    if (rows.empty()) throw std::invalid_argument("rref of an empty list: use Subspace::span with an explicit ambient");
    return Subspace::span(rows.front().field(), rows.front().dim(), rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    a.require_compatible(b);
    std::vector<Vector> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Subspace::span(a.field(), a.ambient(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    a.require_compatible(b);
    // Zassenhaus: rows (u | u) for u in a, (w | 0) for w in b. After elimination
    // the rows with vanishing left half carry a basis of a cap b on the right.
    const std::size_t n = a.ambient();
    std::vector<Vector> work;
    Vector zero(a.field(), n);
    for (const auto& u : a.rows()) work.push_back(concat(u, u));
    for (const auto& w : b.rows()) work.push_back(concat(w, zero));
    auto pivots = gauss_jordan(work, 2 * n);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < work.size(); ++i)
        if (pivots[i] >= n) out.push_back(tail(work[i], n));
    return Subspace::span(a.field(), n, out);
}

Subspace complement_in(const Subspace& a, const Subspace& b) {
    a.require_compatible(b);
    if (!b.contains(a)) throw PreconditionError("complement_in: first subspace is not contained in the second");
    Subspace acc = a;
    std::vector<Vector> kept;
    for (const auto& row : b.rows()) {
        if (acc.contains(row)) continue;
        kept.push_back(row);
        acc = sum(acc, Subspace::span(a.field(), a.ambient(), std::span<const Vector>(&row, 1)));
    }
    return Subspace::span(a.field(), a.ambient(), kept);
}

bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }

Subspace kernel(Field field, std::span<const Vector> images) {
    const std::size_t n = images.size();
    if (n == 0) return Subspace(field, 0);
    const std::size_t m = images.front().dim();
    std::vector<Vector> work;
    work.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(images[i].field() == field) || images[i].dim() != m) throw MismatchError("kernel: inconsistent images");
        work.push_back(concat(images[i], Vector::unit(field, n, i)));
    }
    auto pivots = gauss_jordan(work, m + n);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < work.size(); ++i)
        if (pivots[i] >= m) out.push_back(tail(work[i], m));
    return Subspace::span(field, n, out);
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
    os << "span{";
    for (std::size_t i = 0; i < s.rows().size(); ++i) os << (i ? ", " : "") << s.rows()[i];
    return os << '}';
}

}  // namespace sgl

#include "sgl/field.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "sgl/errors.hpp"

namespace sgl {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p > kMaxPrime || !is_prime(p))
        throw std::invalid_argument("GF(p) needs a prime p <= 2^31, got " + std::to_string(p));
    return Field{p};
}

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
    if (is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
    auto p = static_cast<long long>(p_);
    long long r = n % p;
    if (r < 0) r += p;
    return Scalar(static_cast<std::uint64_t>(r), p_);
}

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar Field::parse(std::string_view text) const {
    std::string s(text);
    if (is_rational()) {
        auto slash = s.find('/');
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
            throw std::invalid_argument("not a rational literal: '" + s + "'");
        mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Scalar(mpq_class(n, d));
    }
    if (!is_integer_literal(s)) throw std::invalid_argument("not an integer literal: '" + s + "'");
    mpz_class n(s[0] == '+' ? s.substr(1) : s);
    mpz_class r = n % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return Scalar(r.get_ui(), p_);
}

Field Scalar::field() const {
    if (auto* r = std::get_if<Residue>(&value_)) return Field{r->modulus};
    return Field::rationals();
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->modulus;
    return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    bool same = value_.index() == o.value_.index();
    if (same && value_.index() == 0)
        same = std::get<Residue>(value_).modulus == std::get<Residue>(o.value_).modulus;
    if (!same) throw MismatchError("scalar field mismatch: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::operator-() const {
    if (auto* r = std::get_if<Residue>(&value_)) return Scalar((r->modulus - r->value) % r->modulus, r->modulus);
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&value_)) {
        r->value = (r->value + std::get<Residue>(o.value_).value) % r->modulus;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    if (auto* r = std::get_if<Residue>(&value_)) {
        r->value = (r->value * std::get<Residue>(o.value_).value) % r->modulus;
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (auto* r = std::get_if<Residue>(&value_)) {
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = r->value, e = r->modulus - 2;
        while (e) {
            if (e & 1) result = result * base % r->modulus;
            base = base * base % r->modulus;
            e >>= 1;
        }
        return Scalar(result, r->modulus);
    }
    return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

std::string Scalar::to_string() const {
    if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    if (auto* r = std::get_if<Scalar::Residue>(&a.value_)) return r->value == std::get<Scalar::Residue>(b.value_).value;
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace sgl

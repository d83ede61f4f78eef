#pragma once

// Exact scalars over Q (arbitrary precision) or GF(p), p prime, p <= 2^31.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace sgl {

class Scalar;

/// Field tag. characteristic() == 0 means the rationals.
class Field {
public:
    static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

    Field() = default;  // Q

    static Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless p is a prime <= 2^31.
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long n) const;
    /// "p/q" or "n" over Q; an integer literal reduced mod p over GF(p).
    Scalar parse(std::string_view text) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Mixed-field arithmetic throws MismatchError.
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}
    explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
    Scalar(std::uint64_t residue, std::uint64_t modulus) : value_(Residue{residue % modulus, modulus}) {}

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    /// Canonical text: "3/4", "-2", "0"; residues as 0..p-1.
    std::string to_string() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
    };
    void require_same_field(const Scalar& o) const;

    std::variant<Residue, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace sgl

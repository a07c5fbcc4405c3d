#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace icp {

/// Raised when two scalars (or maps) from different fields meet.
class FieldMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised on malformed scalar text or an impossible conversion (1/p in GF(p)).
class ScalarParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The ground field: either Q or GF(p) for a prime p < 2^31.
class Field {
public:
    static Field rationals() { return Field{0}; }
    static Field prime(std::uint64_t p);

    /// Accepts "Q", "GF(p)" and "GF:p".
    static Field parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); residues are kept in [0, p).
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;

    Scalar(Field field, long value);
    Scalar(Field field, const mpq_class& value);

    static Scalar zero(Field field) { return Scalar(field, 0L); }
    static Scalar one(Field field) { return Scalar(field, 1L); }

    /// Parses "p/q", "n" or "r mod p". Rational text is mapped into GF(p) when
    /// the target field is finite.
    static Scalar parse(std::string_view text, Field field);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// "p/q" ("p" when q = 1) for rationals, "r mod p" for residues.
    std::string to_string() const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    /// acc += a * b without a temporary; the inner loop of every contraction.
    void add_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

private:
    void require_same_field(const Scalar& other) const;

    Field field_ = Field::rationals();
    mpq_class q_;
    std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace icp

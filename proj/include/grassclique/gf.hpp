#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace grassclique {

/// Arithmetic in GF(q), q = p^e <= 32, with polynomial-basis integer-coded
/// elements: code = sum c_i * p^i stands for the polynomial sum c_i * x^i.
///
/// A Field is immutable after construction; all operations are table lookups
/// and safe for unrestricted concurrent use.
class Field {
public:
    /// Field of order q with the default modulus polynomial.
    static std::shared_ptr<const Field> make(int q);

    /// Field of order q = p^e with an explicit modulus, given as a
    /// coefficient list over GF(p), constant term first, monic of degree e.
    /// The modulus is ignored for prime q. Throws std::invalid_argument if q
    /// is not a prime power <= 32 or the modulus is not monic irreducible.
    static std::shared_ptr<const Field> make(int q, const std::vector<int>& modulus);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }

    /// Multiplicative inverse; throws std::domain_error for a = 0.
    std::uint8_t inv(std::uint8_t a) const;
    std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }

    /// "code <-> polynomial" legend, one line per element, for docs and -v output.
    std::string element_table() const;

    /// Structural identity (same p, e and modulus).
    bool same_as(const Field& other) const;

private:
    Field(int p, int e, std::vector<int> modulus);
    std::size_t idx(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    int p_, e_, q_;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_, mul_;
    std::vector<std::uint8_t> neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Throws std::invalid_argument unless a and b live in structurally equal fields.
void require_same_field(const Field& a, const Field& b);

/// A field element bound to its field, for code that wants checked arithmetic.
/// Matrices store raw codes instead and go through Field directly.
class Elem {
public:
    Elem(FieldPtr field, int code);

    int code() const { return code_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);
    friend bool operator==(const Elem& a, const Elem& b);

    Elem inverse() const;
    Elem operator-() const;

private:
    FieldPtr field_;
    std::uint8_t code_;
};

}  // namespace grassclique

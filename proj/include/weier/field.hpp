#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace weier {

class FieldElem;

// Coefficient field: a prime field F_p (p <= 2^31) or the rationals.
class Field {
public:
    enum class Kind { Prime, Rationals };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    // Throws InvalidField unless p is a prime in [2, 2^31].
    static Field prime(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    // 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long v) const;
    FieldElem from_integer(const mpz_class& v) const;
    // Throws DivisionByZero if den maps to zero in the field.
    FieldElem from_fraction(const mpz_class& num, const mpz_class& den) const;

    // "Fp:7" or "Q"
    std::string describe() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

// An exact field element. Residues are kept in [0, p); rationals are kept
// in lowest terms with positive denominator, which mpq_class guarantees.
class FieldElem {
public:
    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    // Throws FieldMismatch when the operands live in different fields.
    bool operator==(const FieldElem& o) const;

    // Residue for F_p; requires is_prime field.
    std::uint32_t residue() const;
    // Value for Q; requires rationals.
    const mpq_class& rational() const;

    // True for a negative rational; residues are never negative.
    bool is_negative() const;

    // Decimal residue, or "a/b" / "a".
    std::string to_string() const;

private:
    friend class Field;
    FieldElem(std::uint32_t modulus, std::uint32_t residue) : modulus_(modulus), value_(residue) {}
    explicit FieldElem(mpq_class q) : modulus_(0), value_(std::move(q)) {}

    void require_same(const FieldElem& o) const;

    std::uint32_t modulus_;  // 0 for Q
    std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace weier

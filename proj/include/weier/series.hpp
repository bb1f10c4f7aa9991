#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "weier/field.hpp"

namespace weier {

// X^mu * Y^k. Exponents are stored as (k, mu_1, ..., mu_n) so that the
// lexicographic order on the storage is the canonical (k, lex mu) order.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars + 1, 0) {}
    Monomial(std::uint32_t y, std::span<const std::uint32_t> x);

    std::size_t nvars() const noexcept { return e_.size() - 1; }
    std::uint32_t y() const noexcept { return e_[0]; }
    // 0-based variable index: x(0) is the exponent of X1.
    std::uint32_t x(std::size_t i) const noexcept { return e_[i + 1]; }
    std::uint32_t xn() const noexcept { return e_.back(); }
    std::uint32_t total_x() const noexcept;

    void set_y(std::uint32_t v) noexcept { e_[0] = v; }
    void set_x(std::size_t i, std::uint32_t v) noexcept { e_[i + 1] = v; }

    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

private:
    boost::container::small_vector<std::uint32_t, 4> e_;
};

struct Term {
    Monomial mono;
    FieldElem coeff;
};

// A truncated element of F[X1..Xn][[Y]]: coefficients are known modulo Y^prec.
// Terms are kept sorted in canonical order with no zero coefficients and
// every Y-exponent below prec. X-degrees are never capped.
class Series {
public:
    Series(Field field, std::size_t nvars, std::uint32_t prec);

    // Terms may repeat and may carry zero coefficients or Y-exponents past
    // the precision; they are merged, dropped and truncated respectively.
    static Series from_terms(Field field, std::size_t nvars, std::uint32_t prec, std::vector<Term> terms);
    static Series constant(Field field, std::size_t nvars, std::uint32_t prec, const FieldElem& c);
    static Series monomial(Field field, std::size_t nvars, std::uint32_t prec, const FieldElem& c, Monomial m);
    // X_n^s
    static Series xn_power(Field field, std::size_t nvars, std::uint32_t prec, std::uint32_t s);

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::uint32_t prec() const noexcept { return prec_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    FieldElem coefficient(const Monomial& m) const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;
    Series scaled(const FieldElem& c) const;

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    // Exact equality including field, arity and precision.
    bool operator==(const Series& o) const;

private:
    void require_compatible(const Series& o) const;

    Field field_;
    std::size_t nvars_;
    std::uint32_t prec_;
    std::vector<Term> terms_;
};

// Y-adic order; nullopt stands for +infinity (the zero series).
std::optional<std::uint32_t> ord_y(const Series& a);

// X-degrees; nullopt stands for -infinity (the zero series).
std::optional<std::uint32_t> deg_x_total(const Series& a);
// 1-based variable index, as in X1..Xn.
std::optional<std::uint32_t> deg_x_var(const Series& a, std::size_t var);
std::optional<std::uint32_t> deg_xn(const Series& a);

// Keeps the Y^0 terms; precision is preserved.
Series reduce_mod_y(const Series& a);

// Degree split in X_n: alpha keeps mu_n < s, tau keeps mu_n >= s shifted
// down by s, so that a = alpha(a, s) + X_n^s * tau(a, s).
Series alpha(const Series& a, std::uint32_t s);
Series tau(const Series& a, std::uint32_t s);

// Throws PrecisionIncrease when new_prec > prec(a), InvalidPrecision when 0.
Series truncate(const Series& a, std::uint32_t new_prec);

// Multiplication by Y^d; the result is known modulo Y^(prec + d).
Series shift_y(const Series& a, std::uint32_t d);
// Exact division by Y^d; requires ord_y(a) >= d and d < prec(a).
Series unshift_y(const Series& a, std::uint32_t d);
// Multiplication by X_n^s.
Series mul_xn_power(const Series& a, std::uint32_t s);

// Coefficient of Y^k as a polynomial in X, returned at precision 1.
Series y_slice(const Series& a, std::uint32_t k);
// Coefficient of X_n^d as a series in X1..X_{n-1}, Y (X_n exponent 0).
Series xn_coefficient(const Series& a, std::uint32_t d);

// Same terms at a different arity-compatible precision (may raise precision;
// used only where the caller knows the extra coefficients are exact).
Series with_prec(const Series& a, std::uint32_t prec);

// Canonical text: terms in (k, lex mu) order, e.g. "1 + X*Y - 1/2*X^2*Y^2".
// A single variable is written X, otherwise X1..Xn.
std::string render(const Series& a);

}  // namespace weier

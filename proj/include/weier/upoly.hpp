#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weier/field.hpp"
#include "weier/series.hpp"

namespace weier {

// Dense univariate polynomial over a Field, coefficients low degree first,
// no trailing zeros.
class UPoly {
public:
    explicit UPoly(Field field) : field_(field) {}
    UPoly(Field field, std::vector<FieldElem> coeffs);

    static UPoly constant(const FieldElem& c);
    // c * X^k
    static UPoly monomial(const FieldElem& c, std::size_t k);
    // X - root
    static UPoly linear(const FieldElem& root);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
    FieldElem coeff(std::size_t k) const;
    // Requires a nonzero polynomial.
    const FieldElem& lead() const;
    bool is_monic() const;
    bool is_one() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator-() const;
    UPoly scaled(const FieldElem& c) const;
    // Throws DivisionByZero for a zero divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
    UPoly operator/(const UPoly& o) const { return divmod(o).first; }
    UPoly operator%(const UPoly& o) const { return divmod(o).second; }

    UPoly monic() const;
    UPoly derivative() const;
    UPoly pow(unsigned e) const;
    FieldElem eval(const FieldElem& x) const;

    bool operator==(const UPoly& o) const;

    // Same text form as a one-variable series.
    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<FieldElem> c_;
};

// Monic gcd (zero only when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct Bezout {
    UPoly g;  // monic gcd
    UPoly s;
    UPoly t;  // s a + t b = g
};
Bezout ext_gcd(const UPoly& a, const UPoly& b);

// Y^k level of a one-variable series as a polynomial in X.
UPoly level(const Series& w, std::uint32_t k);
// The polynomial as a Y-free one-variable series at the given precision.
Series to_series(const UPoly& p, std::uint32_t prec);

using FactorList = std::vector<std::pair<UPoly, unsigned>>;

// Squarefree decomposition of a nonzero polynomial: monic pairwise coprime
// squarefree parts with their multiplicities.
FactorList squarefree_decomposition(const UPoly& f);

// Irreducible factorization of a monic polynomial: monic irreducibles with
// multiplicities, sorted by degree then coefficients. Uses Berlekamp's
// algorithm over F_p, and rational roots plus Kronecker's interpolation
// search over Q (DegreeTooLarge if the search exceeds its budget).
FactorList factor_irreducible(const UPoly& f);

// Exhaustive trial division by every monic polynomial of degree <= deg/2
// over F_p. Slow; meant as an independent check on small inputs.
FactorList factor_by_trial_division(const UPoly& f);

// Total order used to list factors deterministically.
bool factor_order(const UPoly& a, const UPoly& b);

}  // namespace weier

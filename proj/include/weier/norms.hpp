#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weier/growth.hpp"
#include "weier/series.hpp"

namespace weier {

// A norm value p^e held as its exponent e, so the base p > 1 never has to be
// chosen. The bottom value stands for the norm of zero (e = -infinity).
class NormExp {
public:
    static NormExp bottom() { return NormExp(); }
    static NormExp of(mpq_class e) { return NormExp(std::move(e)); }

    bool is_bottom() const noexcept { return !exp_.has_value(); }
    // Requires !is_bottom().
    const mpq_class& exponent() const;

    // Exponent of a product of norms.
    NormExp operator+(const NormExp& o) const;

    bool operator==(const NormExp& o) const;
    bool operator<(const NormExp& o) const;
    bool operator<=(const NormExp& o) const { return !(o < *this); }
    bool operator>(const NormExp& o) const { return o < *this; }

    // "p^(q)" or "0".
    std::string to_string() const;

private:
    NormExp() = default;
    explicit NormExp(mpq_class e) : exp_(std::move(e)) {}

    std::optional<mpq_class> exp_;
};

NormExp max(const NormExp& a, const NormExp& b);

// Positive rational weight vector c for the weighted norm.
class Weights {
public:
    // Throws InvalidWeights when empty or any entry is <= 0.
    explicit Weights(std::vector<mpq_class> c);

    std::size_t size() const noexcept { return c_.size(); }
    const mpq_class& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<mpq_class>& values() const noexcept { return c_; }
    const mpq_class& last() const { return c_.back(); }

    // c . mu
    mpq_class dot(const Monomial& m) const;

    friend bool operator==(const Weights&, const Weights&) = default;

private:
    std::vector<mpq_class> c_;
};

// |a|_lambda = p^(-lambda(ord_Y a)).
NormExp norm_lambda(const Series& a, const GrowthFn& lam);

// ||a||_{lambda,c} = max over terms of p^(-lambda(k) + c . mu).
// Throws ArityMismatch when c does not have one entry per X variable.
NormExp norm_weighted(const Series& a, const GrowthFn& lam, const Weights& c);

struct WeightSelection {
    Weights weights;
    std::uint32_t s;
};

// Finds weights for which g is X_n-distinguished of degree s in the weighted
// ring: ||g_s||_{lambda,(c_1..c_{n-1})} = 1 and every other X_n-slice
// satisfies ||g_k X_n^k|| < p^(c_n s). Throws NotDistinguished when g mod Y
// is not unitary in X_n, WeightSearchExhausted if no candidate passes.
WeightSelection select_weights(const Series& g, const GrowthFn& lam);

// Re-checks the weighted distinguished conditions for g at degree s.
bool is_weighted_distinguished(const Series& g, const GrowthFn& lam, const Weights& c, std::uint32_t s);

struct MembershipViolation {
    std::uint32_t k;
    std::uint32_t degree;
    mpq_class bound;
};

// Truncation-level check of deg_X(f_k) <= C * lambda(k) for k0 <= k < prec.
// Membership in the growth ring is an asymptotic property; passing here is
// evidence only.
struct MembershipReport {
    mpq_class constant;
    std::uint32_t k0;
    std::uint32_t prec;
    std::vector<MembershipViolation> violations;

    bool pass() const { return violations.empty(); }
};

MembershipReport membership_check(const Series& f, const GrowthFn& lam, const mpq_class& constant, std::uint32_t k0);

}  // namespace weier

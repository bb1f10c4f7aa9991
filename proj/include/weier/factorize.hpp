#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weier/growth.hpp"
#include "weier/series.hpp"
#include "weier/upoly.hpp"

namespace weier {

// f = Y^d h with h mod Y != 0. h has precision prec(f) - d. A series that
// vanishes to its precision raises PrecisionUnderflow.
std::pair<std::uint32_t, Series> strip_y_power(const Series& f);

// Scope limits for factoring the mod-Y image.
inline constexpr std::uint32_t max_factor_prime = 31;
inline constexpr long max_factor_degree_prime = 12;
inline constexpr long max_factor_degree_rational = 6;

// Irreducible factorization of w mod Y (one X variable) into monic factors
// with multiplicities. The product, times the leading coefficient, is
// checked against w mod Y before returning.
FactorList factor_mod_y(const Series& w);

// Lifts w mod Y = a0 * b0 (monic, coprime) to monic A, B with A * B = w
// modulo Y^prec(w), A = a0 and B = b0 modulo Y.
std::pair<Series, Series> hensel_lift(const Series& w, const UPoly& a0, const UPoly& b0);

enum class FactorStatus {
    LiftedCoprime,  // Hensel lift of a squarefree block
    SplitBlock,     // divisor found inside a repeated block
    UnsplitBlock,   // repeated block with no divisor found at this precision
};

struct Factor {
    Series series;
    unsigned multiplicity = 1;
    FactorStatus status = FactorStatus::LiftedCoprime;
    std::string reason;  // set for UnsplitBlock
};

std::string status_text(const Factor& f);

// f = unit * Y^y_power * prod factor^multiplicity modulo Y^prec(f). Unit and
// factors are known modulo Y^(prec(f) - y_power).
struct Factorization {
    Series unit;
    std::uint32_t y_power = 0;
    std::vector<Factor> factors;
};

// Node budget for the divisor search inside a repeated block.
inline constexpr unsigned long divisor_search_budget = 2'000'000;

Factorization factor_series(const Series& f, const GrowthFn& lam);

// unit * Y^d * prod factors, at the precision of f.
Series expand(const Factorization& fz);

}  // namespace weier

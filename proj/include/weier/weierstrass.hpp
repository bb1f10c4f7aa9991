#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weier/growth.hpp"
#include "weier/norms.hpp"
#include "weier/series.hpp"

namespace weier {

// s when g mod Y is a nonzero polynomial of X_n-degree s whose leading
// X_n-coefficient is a nonzero constant; nullopt otherwise.
std::optional<std::uint32_t> is_distinguished(const Series& g);

// f^{-1} mod Y^prec for f = c0 mod Y with c0 a nonzero constant, summed as
// c0^{-1} (1 + h + h^2 + ...) with h = 1 - f/c0. Throws NotAUnit otherwise.
Series invert_unit(const Series& f);

// Norm data backing a contraction division. `rate` is ||h|| - c_n s in
// exponent form; it is empty when h = 0, in which case one step suffices.
struct ContractionCertificate {
    NormExp h_norm = NormExp::bottom();
    NormExp tau_f_norm = NormExp::bottom();
    mpq_class cn_s;
    std::optional<mpq_class> rate;
    std::uint64_t iteration_bound = 1;
};

// f = q g + r modulo Y^N, N = min(prec f, prec g), deg_{X_n} r < s.
struct DivisionResult {
    Series q;
    Series r;
    std::uint32_t s = 0;
    // Contraction steps for divide, Y-levels for divide_oracle.
    std::uint32_t iterations = 0;
    std::optional<Weights> weights_used;
    std::optional<ContractionCertificate> certificate;
};

// Division by an X_n-distinguished g through the fixed point
// M = tau(f) - tau(h M), h = alpha(g) / tau(g), then q = M / tau(g) and
// r = f - q g. Weights default to select_weights(g, lam); explicit weights
// must make ||h|| < p^(c_n s) or ContractionViolated is thrown.
DivisionResult divide(const Series& f, const Series& g, const GrowthFn& lam,
                      const std::optional<Weights>& weights = std::nullopt);

// Independent division: polynomial long division in X_n by g mod Y, one
// Y-level at a time, carrying the higher Y-levels of g as corrections.
DivisionResult divide_oracle(const Series& f, const Series& g);

struct Preparation {
    Series omega;
    Series unit;
    std::uint32_t s = 0;
    DivisionResult division;
};

// g = unit * omega with omega monic of X_n-degree s, omega = X_n^s - r where
// X_n^s = q g + r, and unit = q^{-1}.
Preparation prepare(const Series& g, const GrowthFn& lam);

// s when omega is monic in X_n of degree s, a polynomial in X_n, and
// distinguished; nullopt otherwise.
std::optional<std::uint32_t> weierstrass_degree(const Series& omega);

// Coordinates (r_0, ..., r_{s-1}) of the class of f in
// Y^d F[X;Y,lambda] / Y^d omega F[X;Y,lambda] over the basis
// Y^d, Y^d X_n, ..., Y^d X_n^{s-1}. Each r_i has X_n-degree 0 and
// precision prec(f) - d.
std::vector<Series> reduce_mod_omega(const Series& f, const Series& omega, std::uint32_t d, const GrowthFn& lam);

}  // namespace weier

#include "weier/weierstrass.hpp"

#include <algorithm>

#include "weier/error.hpp"

namespace weier {

namespace {

// The nonzero constant c0 with f = c0 mod Y, if there is one.
std::optional<FieldElem> constant_mod_y(const Series& f)
{
    const Series f0 = reduce_mod_y(f);
    if (f0.size() != 1 || f0.terms().front().mono.total_x() != 0) return std::nullopt;
    return f0.terms().front().coeff;
}

void require_compatible(const Series& f, const Series& g)
{
    if (!(f.field() == g.field())) throw Error(ErrorKind::FieldMismatch, "dividend and divisor over different fields");
    if (f.nvars() != g.nvars()) throw Error(ErrorKind::ArityMismatch, "dividend and divisor of different arity");
}

std::uint64_t iteration_bound(const NormExp& tau_f, const std::optional<mpq_class>& rate, const mpq_class& floor_lambda)
{
    if (tau_f.is_bottom() || !rate) return 1;
    mpq_class steps = (tau_f.exponent() + floor_lambda) / (-*rate);
    mpz_class ceil_steps;
    mpz_cdiv_q(ceil_steps.get_mpz_t(), steps.get_num_mpz_t(), steps.get_den_mpz_t());
    if (ceil_steps < 0) ceil_steps = 0;
    if (!ceil_steps.fits_ulong_p()) throw Error(ErrorKind::IterationBudgetExceeded, "iteration bound overflows");
    return ceil_steps.get_ui() + 1;
}

// Long division of the polynomial p by g0 in X_n, where g0 has X_n-degree s
// and leading X_n-coefficient the constant 1 / lead_inv. Both have precision 1.
std::pair<Series, Series> divide_polynomial(const Series& p, const Series& g0, std::uint32_t s,
                                            const FieldElem& lead_inv)
{
    Series q(p.field(), p.nvars(), 1);
    Series r = p;
    while (true) {
        auto d = deg_xn(r);
        if (!d || *d < s) break;
        Series step = mul_xn_power(xn_coefficient(r, *d), *d - s).scaled(lead_inv);
        q += step;
        r -= step * g0;
    }
    return {std::move(q), std::move(r)};
}

}  // namespace

std::optional<std::uint32_t> is_distinguished(const Series& g)
{
    const Series g0 = reduce_mod_y(g);
    auto s = deg_xn(g0);
    if (!s) return std::nullopt;
    const Series lead = xn_coefficient(g0, *s);
    if (lead.size() != 1 || lead.terms().front().mono.total_x() != 0) return std::nullopt;
    return s;
}

Series invert_unit(const Series& f)
{
    auto c0 = constant_mod_y(f);
    if (!c0) throw Error(ErrorKind::NotAUnit, "series is not a nonzero constant modulo Y");
    const FieldElem c0_inv = c0->inverse();
    const Series one = Series::constant(f.field(), f.nvars(), f.prec(), f.field().one());
    const Series h = one - f.scaled(c0_inv);  // ord_Y(h) >= 1
    Series acc = one;
    for (std::uint32_t i = 1; i < f.prec(); ++i) acc = one + h * acc;
    return acc.scaled(c0_inv);
}

DivisionResult divide(const Series& f_in, const Series& g_in, const GrowthFn& lam, const std::optional<Weights>& weights)
{
    require_compatible(f_in, g_in);
    const std::uint32_t prec = std::min(f_in.prec(), g_in.prec());
    const Series f = truncate(f_in, prec);
    const Series g = truncate(g_in, prec);

    const auto s_opt = is_distinguished(g);
    if (!s_opt) throw Error(ErrorKind::NotDistinguished, "divisor is not X_n-distinguished");
    const std::uint32_t s = *s_opt;

    Weights c = weights ? *weights : select_weights(g, lam).weights;
    if (c.size() != g.nvars()) throw Error(ErrorKind::ArityMismatch, "weight vector arity mismatch");

    const Series u_inv = invert_unit(tau(g, s));
    const Series h = alpha(g, s) * u_inv;

    ContractionCertificate cert;
    cert.cn_s = c.last() * s;
    cert.h_norm = norm_weighted(h, lam, c);
    if (!(cert.h_norm < NormExp::of(cert.cn_s)))
        throw Error(ErrorKind::ContractionViolated,
                    "||h|| = " + cert.h_norm.to_string() + " is not below p^(c_n s) = p^(" + cert.cn_s.get_str() + ")");
    if (!cert.h_norm.is_bottom()) cert.rate = cert.h_norm.exponent() - cert.cn_s;

    const Series tau_f = tau(f, s);
    cert.tau_f_norm = norm_weighted(tau_f, lam, c);
    cert.iteration_bound = iteration_bound(cert.tau_f_norm, cert.rate, lam(prec - 1));

    // Each step adds one more term of the Neumann series of (I + tau o h)^{-1};
    // the corrections shrink in norm until they vanish modulo Y^prec.
    Series m = tau_f;
    std::uint32_t iterations = 0;
    while (true) {
        if (++iterations > cert.iteration_bound)
            throw Error(ErrorKind::IterationBudgetExceeded,
                        "contraction did not stabilise within " + std::to_string(cert.iteration_bound) + " steps");
        Series next = tau_f - tau(h * m, s);
        if (next == m) break;
        m = std::move(next);
    }

    Series q = m * u_inv;
    Series r = f - q * g;
    if (auto dr = deg_xn(r); dr && *dr >= s)
        throw Error(ErrorKind::InternalError, "remainder X_n-degree not below s");
    return DivisionResult{std::move(q), std::move(r), s, iterations, std::move(c), std::move(cert)};
}

DivisionResult divide_oracle(const Series& f, const Series& g)
{
    require_compatible(f, g);
    const std::uint32_t prec = std::min(f.prec(), g.prec());
    const auto s_opt = is_distinguished(g);
    if (!s_opt) throw Error(ErrorKind::NotDistinguished, "divisor is not X_n-distinguished");
    const std::uint32_t s = *s_opt;

    const Series g0 = y_slice(g, 0);
    const FieldElem lead_inv = xn_coefficient(g0, s).terms().front().coeff.inverse();

    std::vector<Series> g_levels;
    std::vector<Series> q_levels;
    std::vector<Term> q_terms, r_terms;
    for (std::uint32_t j = 0; j < prec; ++j) {
        g_levels.push_back(y_slice(g, j));
        Series target = y_slice(f, j);
        for (std::uint32_t i = 0; i < j; ++i) target -= q_levels[i] * g_levels[j - i];
        auto [qj, rj] = divide_polynomial(target, g0, s, lead_inv);
        for (auto t : qj.terms()) {
            t.mono.set_y(j);
            q_terms.push_back(std::move(t));
        }
        for (auto t : rj.terms()) {
            t.mono.set_y(j);
            r_terms.push_back(std::move(t));
        }
        q_levels.push_back(std::move(qj));
    }
    return DivisionResult{Series::from_terms(f.field(), f.nvars(), prec, std::move(q_terms)),
                          Series::from_terms(f.field(), f.nvars(), prec, std::move(r_terms)),
                          s,
                          prec,
                          std::nullopt,
                          std::nullopt};
}

Preparation prepare(const Series& g, const GrowthFn& lam)
{
    const auto s = is_distinguished(g);
    if (!s) throw Error(ErrorKind::NotDistinguished, "series is not X_n-distinguished");
    const Series xs = Series::xn_power(g.field(), g.nvars(), g.prec(), *s);
    DivisionResult division = divide(xs, g, lam);
    if (!constant_mod_y(division.q))
        throw Error(ErrorKind::InternalError, "preparation quotient is not a unit");
    Series omega = xs - division.r;
    Series unit = invert_unit(division.q);
    return Preparation{std::move(omega), std::move(unit), *s, std::move(division)};
}

std::optional<std::uint32_t> weierstrass_degree(const Series& omega)
{
    auto s = deg_xn(omega);
    if (!s) return std::nullopt;
    const Series lead = xn_coefficient(omega, *s);
    if (!(lead == Series::constant(omega.field(), omega.nvars(), omega.prec(), omega.field().one())))
        return std::nullopt;
    return s;
}

std::vector<Series> reduce_mod_omega(const Series& f, const Series& omega, std::uint32_t d, const GrowthFn& lam)
{
    require_compatible(f, omega);
    const auto s = weierstrass_degree(omega);
    if (!s) throw Error(ErrorKind::NotWeierstrass, "modulus is not a monic polynomial in X_n");
    if (auto ord = ord_y(f); d > 0 && ord && *ord < d)
        throw Error(ErrorKind::NotDivisibleByYd, "series is not divisible by Y^" + std::to_string(d));
    const Series h = unshift_y(f, d);
    const DivisionResult division = divide(h, omega, lam);
    std::vector<Series> coords;
    coords.reserve(*s);
    for (std::uint32_t i = 0; i < *s; ++i) coords.push_back(xn_coefficient(division.r, i));
    return coords;
}

}  // namespace weier

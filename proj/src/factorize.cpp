#include "weier/factorize.hpp"

#include <algorithm>

#include "weier/error.hpp"
#include "weier/weierstrass.hpp"

namespace weier {

std::pair<std::uint32_t, Series> strip_y_power(const Series& f)
{
    auto d = ord_y(f);
    if (!d)
        throw Error(ErrorKind::PrecisionUnderflow,
                    "series vanishes modulo Y^" + std::to_string(f.prec()) + "; no Y-power can be split off");
    return {*d, unshift_y(f, *d)};
}

FactorList factor_mod_y(const Series& w)
{
    if (w.nvars() != 1) throw Error(ErrorKind::ArityMismatch, "factorization needs exactly one X variable");
    const UPoly w0 = level(w, 0);
    if (w0.is_zero()) throw Error(ErrorKind::InvalidArgument, "series vanishes modulo Y");
    const Field& field = w.field();
    if (field.is_prime()) {
        if (field.characteristic() > max_factor_prime)
            throw Error(ErrorKind::UnsupportedField, "factoring mod Y supports F_p with p <= 31");
        if (w0.degree() > max_factor_degree_prime)
            throw Error(ErrorKind::DegreeTooLarge, "degree mod Y exceeds 12");
    } else if (w0.degree() > max_factor_degree_rational) {
        throw Error(ErrorKind::DegreeTooLarge, "degree mod Y exceeds 6 over Q");
    }
    FactorList factors = factor_irreducible(w0.monic());
    UPoly product = UPoly::constant(w0.lead());
    for (const auto& [g, m] : factors) product = product * g.pow(m);
    if (!(product == w0)) throw Error(ErrorKind::InternalError, "mod-Y factorization does not reproduce the input");
    return factors;
}

std::pair<Series, Series> hensel_lift(const Series& w, const UPoly& a0, const UPoly& b0)
{
    if (w.nvars() != 1) throw Error(ErrorKind::ArityMismatch, "Hensel lifting needs exactly one X variable");
    if (!a0.is_monic() || !b0.is_monic()) throw Error(ErrorKind::NotMonic, "mod-Y factors must be monic");
    if (!weierstrass_degree(w)) throw Error(ErrorKind::NotMonic, "series to lift is not monic in X");
    const Bezout bz = ext_gcd(a0, b0);
    if (!bz.g.is_one()) throw Error(ErrorKind::NotCoprime, "mod-Y factors share the factor " + bz.g.to_string());
    if (!(level(w, 0) == a0 * b0)) throw Error(ErrorKind::LiftMismatch, "w mod Y is not a0 * b0");

    const std::uint32_t prec = w.prec();
    std::vector<UPoly> a{a0}, b{b0};
    for (std::uint32_t j = 1; j < prec; ++j) {
        UPoly e = level(w, j);
        for (std::uint32_t i = 1; i < j; ++i) e = e - a[i] * b[j - i];
        // a0 * b_j + b0 * a_j = e with deg a_j < deg a0, deg b_j < deg b0.
        UPoly aj = (e * bz.t) % a0;
        auto [bj, rem] = (e - b0 * aj).divmod(a0);
        if (!rem.is_zero()) throw Error(ErrorKind::InternalError, "Hensel step left a remainder");
        a.push_back(std::move(aj));
        b.push_back(std::move(bj));
    }

    auto assemble = [&](const std::vector<UPoly>& levels) {
        Series s(w.field(), 1, prec);
        for (std::uint32_t j = 0; j < prec; ++j) s += shift_y(to_series(levels[j], prec - j), j);
        return s;
    };
    Series lifted_a = assemble(a), lifted_b = assemble(b);
    if (!(lifted_a * lifted_b == w)) throw Error(ErrorKind::InternalError, "Hensel lift does not reproduce w");
    return {std::move(lifted_a), std::move(lifted_b)};
}

std::string status_text(const Factor& f)
{
    switch (f.status) {
    case FactorStatus::LiftedCoprime: return "lifted_coprime";
    case FactorStatus::SplitBlock: return "split_block";
    case FactorStatus::UnsplitBlock: return "unsplit_block(" + f.reason + ")";
    }
    return "unknown";
}

namespace {

// Depth-first search for monic D, E with D * E = W modulo Y^prec,
// D = P and E = Q modulo Y, where P = phi^a and Q = phi^(e-a). Each Y-level
// is a linear equation P E_j + Q D_j = R_j whose solutions form an affine
// family indexed by a polynomial K of degree < deg gcd(P, Q).
class DivisorSearch {
public:
    DivisorSearch(const Series& w, const UPoly& p, const UPoly& q, unsigned long& budget)
        : w_(w), p_(p), q_(q), g_(gcd(p, q)), pp_(p / g_), qp_(q / g_), budget_(budget)
    {
        const Field& field = w.field();
        inv_qp_ = ext_gcd(pp_, qp_).t;
        if (field.is_prime()) {
            for (std::uint32_t r = 0; r < field.characteristic(); ++r) choices_.push_back(field.from_int(r));
        } else {
            for (long r : {0L, 1L, -1L, 2L, -2L}) choices_.push_back(field.from_int(r));
        }
        for (std::uint32_t j = 0; j < w.prec(); ++j) levels_.push_back(level(w, j));
        d_.push_back(p);
        e_.push_back(q);
    }

    bool run() { return step(1); }
    bool exhausted() const { return exhausted_; }

    std::pair<Series, Series> result() const { return {assemble(d_), assemble(e_)}; }

private:
    bool step(std::uint32_t j)
    {
        if (j == w_.prec()) return true;
        if (budget_ == 0) {
            exhausted_ = true;
            return false;
        }
        --budget_;
        UPoly r = levels_[j];
        for (std::uint32_t i = 1; i < j; ++i) r = r - d_[i] * e_[j - i];
        auto [rp, rem] = r.divmod(g_);
        if (!rem.is_zero()) return false;
        const UPoly base = (rp * inv_qp_) % pp_;

        const std::size_t kdim = static_cast<std::size_t>(g_.degree());
        std::vector<std::size_t> idx(kdim, 0);
        while (true) {
            std::vector<FieldElem> kc;
            for (auto i : idx) kc.push_back(choices_[i]);
            const UPoly dj = base + pp_ * UPoly(w_.field(), std::move(kc));
            const UPoly ej = (rp - qp_ * dj) / pp_;
            d_.push_back(dj);
            e_.push_back(ej);
            if (step(j + 1)) return true;
            d_.pop_back();
            e_.pop_back();
            if (exhausted_) return false;
            std::size_t i = 0;
            while (i < kdim && idx[i] + 1 == choices_.size()) idx[i++] = 0;
            if (i == kdim) break;
            ++idx[i];
        }
        return false;
    }

    Series assemble(const std::vector<UPoly>& levels) const
    {
        const std::uint32_t prec = w_.prec();
        Series s(w_.field(), 1, prec);
        for (std::uint32_t j = 0; j < prec; ++j) s += shift_y(to_series(levels[j], prec - j), j);
        return s;
    }

    const Series& w_;
    UPoly p_, q_, g_, pp_, qp_, inv_qp_{p_.field()};
    std::vector<FieldElem> choices_;
    std::vector<UPoly> levels_;
    std::vector<UPoly> d_, e_;
    unsigned long& budget_;
    bool exhausted_ = false;
};

// Splits a lifted block W = phi^e mod Y as far as the divisor search allows.
void split_block(const Series& w, const UPoly& phi, unsigned e, unsigned long& budget, std::vector<Factor>& out)
{
    const std::string at = " at precision " + std::to_string(w.prec());
    if (e == 1) {
        out.push_back({w, 1, FactorStatus::SplitBlock, {}});
        return;
    }
    bool exhausted = false;
    for (unsigned a = 1; 2 * a <= e; ++a) {
        DivisorSearch search(w, phi.pow(a), phi.pow(e - a), budget);
        if (search.run()) {
            auto [d, cofactor] = search.result();
            split_block(d, phi, a, budget, out);
            split_block(cofactor, phi, e - a, budget, out);
            return;
        }
        exhausted = exhausted || search.exhausted();
    }
    std::string reason;
    if (exhausted)
        reason = "divisor search budget exhausted" + at;
    else if (w.field().is_prime())
        reason = "no divisor found" + at;
    else
        reason = "no divisor found" + at + "; rational kernel coefficients searched in [-2,2]";
    out.push_back({w, 1, FactorStatus::UnsplitBlock, std::move(reason)});
}

}  // namespace

Factorization factor_series(const Series& f, const GrowthFn& lam)
{
    if (f.nvars() != 1) throw Error(ErrorKind::ArityMismatch, "factorization needs exactly one X variable");
    auto [d, h] = strip_y_power(f);
    Preparation prep = prepare(h, lam);
    Factorization fz{prep.unit, d, {}};
    if (prep.s == 0) return fz;

    const FactorList irreducibles = factor_mod_y(prep.omega);
    std::vector<UPoly> blocks;
    for (const auto& [phi, m] : irreducibles) blocks.push_back(phi.pow(m));

    // Peel off one coprime block at a time.
    std::vector<Series> lifted;
    Series rest = prep.omega;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
        UPoly others = UPoly::constant(f.field().one());
        for (std::size_t k = i + 1; k < blocks.size(); ++k) others = others * blocks[k];
        auto [block, remaining] = hensel_lift(rest, blocks[i], others);
        lifted.push_back(std::move(block));
        rest = std::move(remaining);
    }
    lifted.push_back(std::move(rest));

    unsigned long budget = divisor_search_budget;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& [phi, m] = irreducibles[i];
        if (m == 1) {
            fz.factors.push_back({lifted[i], 1, FactorStatus::LiftedCoprime, {}});
            continue;
        }
        std::vector<Factor> parts;
        split_block(lifted[i], phi, m, budget, parts);
        std::stable_sort(parts.begin(), parts.end(),
                         [](const Factor& a, const Factor& b) { return render(a.series) < render(b.series); });
        for (auto& part : parts) {
            if (!fz.factors.empty() && fz.factors.back().series == part.series)
                fz.factors.back().multiplicity += part.multiplicity;
            else
                fz.factors.push_back(std::move(part));
        }
    }

    if (!(expand(fz) == f)) throw Error(ErrorKind::InternalError, "factorization does not reproduce f");
    return fz;
}

Series expand(const Factorization& fz)
{
    Series product = fz.unit;
    for (const auto& factor : fz.factors)
        for (unsigned i = 0; i < factor.multiplicity; ++i) product *= factor.series;
    return shift_y(product, fz.y_power);
}

}  // namespace weier

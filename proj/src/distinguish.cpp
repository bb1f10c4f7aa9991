#include "weier/distinguish.hpp"

#include <algorithm>

#include "weier/error.hpp"

namespace weier {

namespace {

constexpr std::uint64_t exponent_limit = std::uint64_t{1} << 31;

std::uint32_t checked(std::uint64_t v)
{
    if (v >= exponent_limit) throw Error(ErrorKind::OutOfRange, "substitution exponent overflows");
    return static_cast<std::uint32_t>(v);
}

std::uint32_t weighted_degree(const std::vector<std::uint32_t>& d, const Monomial& m)
{
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < d.size(); ++i) acc += std::uint64_t{d[i]} * m.x(i);
    return checked(acc);
}

// One substitution X_var -> X_var + sign * X_target^deg.
struct Substitution {
    std::size_t var;     // 0-based
    std::size_t target;  // 0-based
    std::uint32_t deg;
};

std::vector<Substitution> substitutions(const AutoMap& sigma)
{
    std::vector<Substitution> subs;
    if (sigma.kind() == AutoMap::Kind::Elementary) {
        subs.push_back({sigma.source() - 1, sigma.target() - 1, sigma.degree()});
    } else {
        const std::size_t n = sigma.nvars();
        for (std::size_t i = 0; i + 1 < n; ++i) subs.push_back({i, n - 1, sigma.d()[i]});
    }
    return subs;
}

}  // namespace

AutoMap AutoMap::elementary(std::size_t nvars, std::size_t i, std::size_t j, std::uint32_t d)
{
    if (i < 1 || j < 1 || i > nvars || j > nvars)
        throw Error(ErrorKind::ArityMismatch, "substitution variable out of range");
    if (i == j) throw Error(ErrorKind::InvalidArgument, "elementary substitution needs i != j");
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "elementary substitution needs d >= 1");
    AutoMap m;
    m.kind_ = Kind::Elementary;
    m.nvars_ = nvars;
    m.i_ = i;
    m.j_ = j;
    m.d_ = {d};
    return m;
}

AutoMap AutoMap::distinguishing(std::vector<std::uint32_t> d, std::uint32_t t, std::vector<std::uint32_t> nu)
{
    if (d.empty() || d.size() != nu.size()) throw Error(ErrorKind::ArityMismatch, "exponent and nu vectors differ in size");
    if (d != distinguishing_exponents(d.size(), t))
        throw Error(ErrorKind::InvalidArgument, "exponents do not follow the distinguishing recurrence");
    AutoMap m;
    m.kind_ = Kind::Distinguishing;
    m.nvars_ = d.size();
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += std::uint64_t{d[i]} * nu[i];
    m.s_ = checked(s);
    m.d_ = std::move(d);
    m.t_ = t;
    m.nu_ = std::move(nu);
    return m;
}

AutoMap AutoMap::inverse() const
{
    AutoMap m(*this);
    m.direction_ = direction_ == Direction::Forward ? Direction::Inverse : Direction::Forward;
    return m;
}

std::vector<std::uint32_t> distinguishing_exponents(std::size_t nvars, std::uint32_t t)
{
    std::vector<std::uint32_t> d(nvars);
    d[nvars - 1] = 1;
    std::uint64_t tail = 1;  // d_n + ... + d_{n-j+1}
    for (std::size_t j = 1; j < nvars; ++j) {
        const std::size_t idx = nvars - 1 - j;
        d[idx] = checked(1 + std::uint64_t{t} * tail);
        tail += d[idx];
    }
    return d;
}

AutoMap build_sigma(const Series& f)
{
    const std::size_t n = f.nvars();
    const Series f0 = reduce_mod_y(f);
    if (f0.is_zero()) throw Error(ErrorKind::HypothesisFails, "f vanishes modulo Y");
    bool has_xn_term = n == 1;
    for (const auto& t : f0.terms())
        if (t.mono.xn() > 0) has_xn_term = true;
    if (!has_xn_term) throw Error(ErrorKind::HypothesisFails, "no Y-free term involves X_n");

    // Y-free terms sit at k = 0, so the last one in canonical order has the
    // lex-largest exponent.
    const Monomial& top = f0.terms().back().mono;
    std::vector<std::uint32_t> nu(n);
    for (std::size_t i = 0; i < n; ++i) nu[i] = top.x(i);
    const std::uint32_t t = *deg_x_total(f0);

    AutoMap sigma = AutoMap::distinguishing(distinguishing_exponents(n, t), t, std::move(nu));
    for (const auto& term : f0.terms())
        if (!(term.mono == top) && weighted_degree(sigma.d(), term.mono) >= sigma.s())
            throw Error(ErrorKind::InternalError, "lex-smaller exponent does not have smaller weighted degree");
    return sigma;
}

Series apply_map(const AutoMap& sigma, const Series& f)
{
    if (sigma.nvars() != f.nvars()) throw Error(ErrorKind::ArityMismatch, "map and series arity differ");
    const Field& field = f.field();
    const auto subs = substitutions(sigma);
    const bool inverse = sigma.direction() == AutoMap::Direction::Inverse;

    Series out(field, f.nvars(), f.prec());
    for (const auto& term : f.terms()) {
        Monomial base = term.mono;
        for (const auto& sub : subs) base.set_x(sub.var, 0);
        Series image = Series::monomial(field, f.nvars(), f.prec(), term.coeff, base);
        for (const auto& sub : subs) {
            const std::uint32_t mu = term.mono.x(sub.var);
            if (mu == 0) continue;
            std::vector<Term> expansion;
            for (std::uint32_t l = 0; l <= mu; ++l) {
                mpz_class binom;
                mpz_bin_uiui(binom.get_mpz_t(), mu, l);
                FieldElem c = field.from_integer(binom);
                if (inverse && l % 2 == 1) c = -c;
                Monomial m(f.nvars());
                m.set_x(sub.var, mu - l);
                m.set_x(sub.target, checked(std::uint64_t{sub.deg} * l));
                expansion.push_back({std::move(m), std::move(c)});
            }
            image *= Series::from_terms(field, f.nvars(), f.prec(), std::move(expansion));
        }
        out += image;
    }
    return out;
}

}  // namespace weier

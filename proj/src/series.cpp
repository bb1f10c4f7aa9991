#include "weier/series.hpp"

#include <algorithm>
#include <sstream>

#include "weier/error.hpp"

namespace weier {

Monomial::Monomial(std::uint32_t y, std::span<const std::uint32_t> x) : e_(x.size() + 1)
{
    e_[0] = y;
    std::copy(x.begin(), x.end(), e_.begin() + 1);
}

std::uint32_t Monomial::total_x() const noexcept
{
    std::uint32_t t = 0;
    for (std::size_t i = 1; i < e_.size(); ++i) t += e_[i];
    return t;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

namespace {

// Sorts, merges equal monomials and drops zero coefficients.
std::vector<Term> canonicalize(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    return out;
}

Series filtered(const Series& a, std::uint32_t prec, auto&& keep)
{
    std::vector<Term> kept;
    for (const auto& t : a.terms())
        if (keep(t)) kept.push_back(t);
    return Series::from_terms(a.field(), a.nvars(), prec, std::move(kept));
}

}  // namespace

Series::Series(Field field, std::size_t nvars, std::uint32_t prec) : field_(field), nvars_(nvars), prec_(prec)
{
    if (nvars == 0) throw Error(ErrorKind::ArityMismatch, "a series needs at least one X variable");
    if (prec == 0) throw Error(ErrorKind::InvalidPrecision, "precision must be at least 1");
}

Series Series::from_terms(Field field, std::size_t nvars, std::uint32_t prec, std::vector<Term> terms)
{
    Series s(field, nvars, prec);
    std::erase_if(terms, [&](const Term& t) {
        if (t.mono.nvars() != nvars) throw Error(ErrorKind::ArityMismatch, "monomial arity differs from series arity");
        if (!(t.coeff.field() == field)) throw Error(ErrorKind::FieldMismatch, "coefficient from another field");
        return t.mono.y() >= prec;
    });
    s.terms_ = canonicalize(std::move(terms));
    return s;
}

Series Series::constant(Field field, std::size_t nvars, std::uint32_t prec, const FieldElem& c)
{
    return monomial(field, nvars, prec, c, Monomial(nvars));
}

Series Series::monomial(Field field, std::size_t nvars, std::uint32_t prec, const FieldElem& c, Monomial m)
{
    std::vector<Term> t;
    t.push_back({std::move(m), c});
    return from_terms(field, nvars, prec, std::move(t));
}

Series Series::xn_power(Field field, std::size_t nvars, std::uint32_t prec, std::uint32_t s)
{
    Monomial m(nvars);
    m.set_x(nvars - 1, s);
    return monomial(field, nvars, prec, field.one(), std::move(m));
}

FieldElem Series::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return field_.zero();
}

void Series::require_compatible(const Series& o) const
{
    if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "series over different fields");
    if (nvars_ != o.nvars_) throw Error(ErrorKind::ArityMismatch, "series with different numbers of X variables");
}

Series Series::operator+(const Series& o) const
{
    require_compatible(o);
    const std::uint32_t prec = std::min(prec_, o.prec_);
    Series r(field_, nvars_, prec);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    auto emit = [&](const Term& t) {
        if (t.mono.y() < prec) r.terms_.push_back(t);
    };
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->mono < b->mono) {
            emit(*a++);
        } else if (b->mono < a->mono) {
            emit(*b++);
        } else {
            FieldElem c = a->coeff + b->coeff;
            if (!c.is_zero()) emit(Term{a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    for (; a != terms_.end(); ++a) emit(*a);
    for (; b != o.terms_.end(); ++b) emit(*b);
    return r;
}

Series Series::operator-() const
{
    Series r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const
{
    require_compatible(o);
    const std::uint32_t prec = std::min(prec_, o.prec_);
    std::vector<Term> products;
    for (const auto& s : terms_) {
        if (s.mono.y() >= prec) break;
        for (const auto& t : o.terms_) {
            // terms are sorted by Y-exponent first
            if (s.mono.y() + t.mono.y() >= prec) break;
            products.push_back({s.mono * t.mono, s.coeff * t.coeff});
        }
    }
    Series r(field_, nvars_, prec);
    r.terms_ = canonicalize(std::move(products));
    return r;
}

Series Series::scaled(const FieldElem& c) const
{
    if (c.is_zero()) return Series(field_, nvars_, prec_);
    Series r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

bool Series::operator==(const Series& o) const
{
    if (!(field_ == o.field_) || nvars_ != o.nvars_ || prec_ != o.prec_ || terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    return true;
}

std::optional<std::uint32_t> ord_y(const Series& a)
{
    if (a.is_zero()) return std::nullopt;
    return a.terms().front().mono.y();
}

namespace {

template <class F>
std::optional<std::uint32_t> max_over_terms(const Series& a, F&& f)
{
    std::optional<std::uint32_t> best;
    for (const auto& t : a.terms()) {
        std::uint32_t v = f(t.mono);
        if (!best || v > *best) best = v;
    }
    return best;
}

}  // namespace

std::optional<std::uint32_t> deg_x_total(const Series& a)
{
    return max_over_terms(a, [](const Monomial& m) { return m.total_x(); });
}

std::optional<std::uint32_t> deg_x_var(const Series& a, std::size_t var)
{
    if (var < 1 || var > a.nvars())
        throw Error(ErrorKind::ArityMismatch, "variable index X" + std::to_string(var) + " out of range");
    return max_over_terms(a, [var](const Monomial& m) { return m.x(var - 1); });
}

std::optional<std::uint32_t> deg_xn(const Series& a) { return deg_x_var(a, a.nvars()); }

Series reduce_mod_y(const Series& a)
{
    return filtered(a, a.prec(), [](const Term& t) { return t.mono.y() == 0; });
}

Series alpha(const Series& a, std::uint32_t s)
{
    return filtered(a, a.prec(), [s](const Term& t) { return t.mono.xn() < s; });
}

Series tau(const Series& a, std::uint32_t s)
{
    std::vector<Term> kept;
    const std::size_t last = a.nvars() - 1;
    for (const auto& t : a.terms()) {
        if (t.mono.xn() < s) continue;
        Term shifted = t;
        shifted.mono.set_x(last, t.mono.xn() - s);
        kept.push_back(std::move(shifted));
    }
    return Series::from_terms(a.field(), a.nvars(), a.prec(), std::move(kept));
}

Series truncate(const Series& a, std::uint32_t new_prec)
{
    if (new_prec == 0) throw Error(ErrorKind::InvalidPrecision, "precision must be at least 1");
    if (new_prec > a.prec())
        throw Error(ErrorKind::PrecisionIncrease, "cannot raise precision from " + std::to_string(a.prec()) +
                                                      " to " + std::to_string(new_prec));
    return filtered(a, new_prec, [new_prec](const Term& t) { return t.mono.y() < new_prec; });
}

Series shift_y(const Series& a, std::uint32_t d)
{
    std::vector<Term> moved(a.terms().begin(), a.terms().end());
    for (auto& t : moved) t.mono.set_y(t.mono.y() + d);
    return Series::from_terms(a.field(), a.nvars(), a.prec() + d, std::move(moved));
}

Series unshift_y(const Series& a, std::uint32_t d)
{
    if (d >= a.prec())
        throw Error(ErrorKind::PrecisionUnderflow, "dividing by Y^" + std::to_string(d) + " leaves no precision");
    auto ord = ord_y(a);
    if (ord && *ord < d) throw Error(ErrorKind::NotDivisibleByYd, "series is not divisible by Y^" + std::to_string(d));
    std::vector<Term> moved(a.terms().begin(), a.terms().end());
    for (auto& t : moved) t.mono.set_y(t.mono.y() - d);
    return Series::from_terms(a.field(), a.nvars(), a.prec() - d, std::move(moved));
}

Series mul_xn_power(const Series& a, std::uint32_t s)
{
    std::vector<Term> moved(a.terms().begin(), a.terms().end());
    const std::size_t last = a.nvars() - 1;
    for (auto& t : moved) t.mono.set_x(last, t.mono.xn() + s);
    return Series::from_terms(a.field(), a.nvars(), a.prec(), std::move(moved));
}

Series y_slice(const Series& a, std::uint32_t k)
{
    std::vector<Term> kept;
    for (const auto& t : a.terms()) {
        if (t.mono.y() != k) continue;
        Term flat = t;
        flat.mono.set_y(0);
        kept.push_back(std::move(flat));
    }
    return Series::from_terms(a.field(), a.nvars(), 1, std::move(kept));
}

Series xn_coefficient(const Series& a, std::uint32_t d)
{
    std::vector<Term> kept;
    const std::size_t last = a.nvars() - 1;
    for (const auto& t : a.terms()) {
        if (t.mono.xn() != d) continue;
        Term flat = t;
        flat.mono.set_x(last, 0);
        kept.push_back(std::move(flat));
    }
    return Series::from_terms(a.field(), a.nvars(), a.prec(), std::move(kept));
}

Series with_prec(const Series& a, std::uint32_t prec)
{
    return Series::from_terms(a.field(), a.nvars(), prec, std::vector<Term>(a.terms().begin(), a.terms().end()));
}

namespace {

std::string monomial_text(const Monomial& m)
{
    std::string out;
    auto factor = [&](const std::string& name, std::uint32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += name;
        if (e > 1) out += '^' + std::to_string(e);
    };
    for (std::size_t i = 0; i < m.nvars(); ++i)
        factor(m.nvars() == 1 ? std::string("X") : "X" + std::to_string(i + 1), m.x(i));
    factor("Y", m.y());
    return out;
}

}  // namespace

std::string render(const Series& a)
{
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms()) {
        const bool negative = t.coeff.is_negative();
        const FieldElem mag = negative ? -t.coeff : t.coeff;
        const std::string mono = monomial_text(t.mono);
        std::string body;
        if (mono.empty())
            body = mag.to_string();
        else if (mag.is_one())
            body = mono;
        else
            body = mag.to_string() + "*" + mono;
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace weier

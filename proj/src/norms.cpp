#include "weier/norms.hpp"

#include <map>

#include "weier/error.hpp"
#include "weier/weierstrass.hpp"

namespace weier {

const mpq_class& NormExp::exponent() const
{
    if (!exp_) throw Error(ErrorKind::InternalError, "exponent of the zero norm");
    return *exp_;
}

NormExp NormExp::operator+(const NormExp& o) const
{
    if (is_bottom() || o.is_bottom()) return bottom();
    return of(*exp_ + *o.exp_);
}

bool NormExp::operator==(const NormExp& o) const
{
    if (is_bottom() || o.is_bottom()) return is_bottom() == o.is_bottom();
    return *exp_ == *o.exp_;
}

bool NormExp::operator<(const NormExp& o) const
{
    if (o.is_bottom()) return false;
    if (is_bottom()) return true;
    return *exp_ < *o.exp_;
}

std::string NormExp::to_string() const
{
    if (is_bottom()) return "0";
    return "p^(" + exp_->get_str() + ")";
}

NormExp max(const NormExp& a, const NormExp& b) { return a < b ? b : a; }

Weights::Weights(std::vector<mpq_class> c) : c_(std::move(c))
{
    if (c_.empty()) throw Error(ErrorKind::InvalidWeights, "empty weight vector");
    for (const auto& v : c_)
        if (sgn(v) <= 0) throw Error(ErrorKind::InvalidWeights, "weights must be positive, got " + v.get_str());
}

mpq_class Weights::dot(const Monomial& m) const
{
    mpq_class acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (m.x(i) != 0) acc += c_[i] * m.x(i);
    return acc;
}

NormExp norm_lambda(const Series& a, const GrowthFn& lam)
{
    auto ord = ord_y(a);
    if (!ord) return NormExp::bottom();
    return NormExp::of(-lam(*ord));
}

namespace {

// lambda(k) for every Y-exponent present, each evaluated once.
class LambdaCache {
public:
    explicit LambdaCache(const GrowthFn& lam) : lam_(lam) {}

    const mpq_class& operator()(std::uint32_t k)
    {
        auto it = values_.find(k);
        if (it == values_.end()) it = values_.emplace(k, lam_(k)).first;
        return it->second;
    }

private:
    const GrowthFn& lam_;
    std::map<std::uint32_t, mpq_class> values_;
};

}  // namespace

NormExp norm_weighted(const Series& a, const GrowthFn& lam, const Weights& c)
{
    if (c.size() != a.nvars())
        throw Error(ErrorKind::ArityMismatch, "weight vector has " + std::to_string(c.size()) + " entries for " +
                                                  std::to_string(a.nvars()) + " variables");
    LambdaCache lambda(lam);
    std::optional<mpq_class> best;
    for (const auto& t : a.terms()) {
        mpq_class e = c.dot(t.mono) - lambda(t.mono.y());
        if (!best || e > *best) best = std::move(e);
    }
    if (!best) return NormExp::bottom();
    return NormExp::of(std::move(*best));
}

bool is_weighted_distinguished(const Series& g, const GrowthFn& lam, const Weights& c, std::uint32_t s)
{
    if (c.size() != g.nvars()) throw Error(ErrorKind::ArityMismatch, "weight vector arity mismatch");
    // g_s must be a unit of norm exactly 1 (exponent 0).
    const Series lead = xn_coefficient(g, s);
    const Series lead0 = reduce_mod_y(lead);
    if (lead0.size() != 1 || lead0.terms().front().mono.total_x() != 0) return false;
    const NormExp lead_norm = norm_weighted(lead, lam, c);
    if (lead_norm.is_bottom() || lead_norm.exponent() != 0) return false;

    LambdaCache lambda(lam);
    const mpq_class top = c.last() * s;
    for (const auto& t : g.terms()) {
        if (t.mono.xn() == s) continue;
        if (!(c.dot(t.mono) - lambda(t.mono.y()) < top)) return false;
    }
    return true;
}

WeightSelection select_weights(const Series& g, const GrowthFn& lam)
{
    const auto s = is_distinguished(g);
    if (!s) throw Error(ErrorKind::NotDistinguished, "g mod Y is not unitary in X_n");

    std::optional<std::uint32_t> top_degree;
    for (const auto& t : g.terms())
        if (t.mono.xn() > *s && (!top_degree || t.mono.xn() > *top_degree)) top_degree = t.mono.xn();

    mpq_class cn = 1;
    if (top_degree) {
        const mpq_class lam1 = lam(1);
        if (sgn(lam1) <= 0) throw Error(ErrorKind::InvalidGrowth, "lambda(1) must be positive");
        mpq_class cand = lam1 / (2 * (*top_degree - *s));
        if (cand < cn) cn = cand;
    }

    const std::size_t n = g.nvars();
    for (int round = 0; round < 60; ++round) {
        if (n == 1) {
            Weights c({cn});
            if (is_weighted_distinguished(g, lam, c, *s)) return {c, *s};
        } else {
            mpq_class low = cn;
            for (int j = 1; j <= 200; ++j) {
                low /= 2;
                std::vector<mpq_class> cv(n - 1, low);
                cv.push_back(cn);
                Weights c(std::move(cv));
                if (is_weighted_distinguished(g, lam, c, *s)) return {c, *s};
            }
        }
        cn /= 2;
    }
    throw Error(ErrorKind::WeightSearchExhausted, "no weights found for X_n-distinguished element");
}

MembershipReport membership_check(const Series& f, const GrowthFn& lam, const mpq_class& constant, std::uint32_t k0)
{
    if (k0 >= f.prec())
        throw Error(ErrorKind::OutOfRange, "onset k0 = " + std::to_string(k0) + " is not below the precision");
    MembershipReport report{constant, k0, f.prec(), {}};
    for (std::uint32_t k = k0; k < f.prec(); ++k) {
        auto deg = deg_x_total(y_slice(f, k));
        if (!deg) continue;
        mpq_class bound = constant * lam(k);
        if (mpq_class(*deg) > bound) report.violations.push_back({k, *deg, std::move(bound)});
    }
    return report;
}

}  // namespace weier

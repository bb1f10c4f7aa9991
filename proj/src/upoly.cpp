#include "weier/upoly.hpp"

#include <algorithm>

#include "weier/error.hpp"

namespace weier {

UPoly::UPoly(Field field, std::vector<FieldElem> coeffs) : field_(field), c_(std::move(coeffs))
{
    for (const auto& c : c_)
        if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "polynomial coefficient from another field");
    trim();
}

UPoly UPoly::constant(const FieldElem& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const FieldElem& c, std::size_t k)
{
    const Field f = c.field();
    std::vector<FieldElem> v(k + 1, f.zero());
    v[k] = c;
    return UPoly(f, std::move(v));
}

UPoly UPoly::linear(const FieldElem& root)
{
    const Field f = root.field();
    return UPoly(f, {-root, f.one()});
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem UPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }

const FieldElem& UPoly::lead() const
{
    if (c_.empty()) throw Error(ErrorKind::InternalError, "leading coefficient of the zero polynomial");
    return c_.back();
}

bool UPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }
bool UPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

UPoly UPoly::operator+(const UPoly& o) const
{
    std::vector<FieldElem> v;
    const std::size_t n = std::max(c_.size(), o.c_.size());
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(coeff(i) + o.coeff(i));
    return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-() const
{
    UPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const
{
    if (is_zero() || o.is_zero()) return UPoly(field_);
    std::vector<FieldElem> v(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(field_, std::move(v));
}

UPoly UPoly::scaled(const FieldElem& c) const
{
    UPoly r(*this);
    for (auto& x : r.c_) x *= c;
    r.trim();
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const
{
    if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (degree() < divisor.degree()) return {UPoly(field_), *this};
    const FieldElem lead_inv = divisor.lead().inverse();
    std::vector<FieldElem> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    std::vector<FieldElem> quot(c_.size() - dd, field_.zero());
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i].is_zero()) continue;
        FieldElem f = rem[i] * lead_inv;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
        quot[i - dd] = std::move(f);
    }
    rem.resize(dd, field_.zero());
    return {UPoly(field_, std::move(quot)), UPoly(field_, std::move(rem))};
}

UPoly UPoly::monic() const
{
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

UPoly UPoly::derivative() const
{
    std::vector<FieldElem> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * field_.from_int(static_cast<long>(i)));
    return UPoly(field_, std::move(v));
}

UPoly UPoly::pow(unsigned e) const
{
    UPoly r = constant(field_.one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

FieldElem UPoly::eval(const FieldElem& x) const
{
    FieldElem acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

bool UPoly::operator==(const UPoly& o) const
{
    if (!(field_ == o.field_) || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

std::string UPoly::to_string() const { return render(to_series(*this, 1)); }

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Bezout ext_gcd(const UPoly& a, const UPoly& b)
{
    const Field f = a.field();
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(f.one()), s1(f);
    UPoly t0(f), t1 = UPoly::constant(f.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FieldElem inv = r0.lead().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UPoly level(const Series& w, std::uint32_t k)
{
    if (w.nvars() != 1) throw Error(ErrorKind::ArityMismatch, "expected a series in one X variable");
    std::vector<FieldElem> v;
    for (const auto& t : w.terms()) {
        if (t.mono.y() != k) continue;
        const std::size_t e = t.mono.x(0);
        while (v.size() <= e) v.push_back(w.field().zero());
        v[e] = t.coeff;
    }
    return UPoly(w.field(), std::move(v));
}

Series to_series(const UPoly& p, std::uint32_t prec)
{
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        Monomial m(1);
        m.set_x(0, static_cast<std::uint32_t>(i));
        terms.push_back({std::move(m), p.coeffs()[i]});
    }
    return Series::from_terms(p.field(), 1, prec, std::move(terms));
}

bool factor_order(const UPoly& a, const UPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i) {
        const FieldElem x = a.coeff(static_cast<std::size_t>(i)), y = b.coeff(static_cast<std::size_t>(i));
        if (x == y) continue;
        if (a.field().is_prime()) return x.residue() < y.residue();
        return x.rational() < y.rational();
    }
    return false;
}

namespace {

// g(X^p) -> g(X) over F_p, using a^p = a.
UPoly pth_root(const UPoly& g, std::uint32_t p)
{
    std::vector<FieldElem> v;
    for (std::size_t i = 0; i < g.coeffs().size(); i += p) v.push_back(g.coeffs()[i]);
    return UPoly(g.field(), std::move(v));
}

void append(FactorList& out, const FactorList& more, unsigned times)
{
    for (const auto& [f, m] : more) out.emplace_back(f, m * times);
}

UPoly pow_mod(UPoly base, mpz_class e, const UPoly& modulus)
{
    UPoly acc = UPoly::constant(base.field().one());
    base = base % modulus;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = (acc * base) % modulus;
        base = (base * base) % modulus;
        e >>= 1;
    }
    return acc;
}

// Basis of the row-vector kernel { v : v M = 0 } of an n x n matrix.
std::vector<std::vector<FieldElem>> left_kernel(std::vector<std::vector<FieldElem>> m, const Field& field)
{
    const std::size_t n = m.size();
    // Work on the transpose so that the kernel is a column kernel.
    std::vector<std::vector<FieldElem>> a(n, std::vector<FieldElem>(n, field.zero()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m[c][r];

    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot(n, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel][col].is_zero()) ++sel;
        if (sel == n) continue;
        std::swap(a[sel], a[row]);
        const FieldElem inv = a[row][col].inverse();
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const FieldElem f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col_of_row.push_back(static_cast<long>(col));
        is_pivot[col] = true;
        ++row;
    }
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(n, field.zero());
        v[free] = field.one();
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) v[pivot_col_of_row[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Berlekamp factorization of a monic squarefree polynomial over F_p.
std::vector<UPoly> berlekamp(const UPoly& f)
{
    const Field field = f.field();
    const std::uint32_t p = field.characteristic();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    if (n <= 1) return {f};

    const UPoly xp = pow_mod(UPoly::monomial(field.one(), 1), mpz_class(p), f);
    std::vector<std::vector<FieldElem>> q(n, std::vector<FieldElem>(n, field.zero()));
    UPoly row = UPoly::constant(field.one());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) q[i][j] = row.coeff(j);
        q[i][i] -= field.one();
        row = (row * xp) % f;
    }
    const auto kernel = left_kernel(std::move(q), field);
    const std::size_t count = kernel.size();

    std::vector<UPoly> factors{f};
    for (const auto& v : kernel) {
        if (factors.size() == count) break;
        const UPoly vp(field, v);
        if (vp.degree() <= 0) continue;
        std::vector<UPoly> refined;
        for (const auto& u : factors) {
            std::vector<UPoly> parts{u};
            for (std::uint32_t s = 0; s < p && u.degree() > 1; ++s) {
                const UPoly shifted = vp - UPoly::constant(field.from_int(static_cast<long>(s)));
                std::vector<UPoly> next;
                for (const auto& w : parts) {
                    const UPoly g = gcd(w, shifted);
                    if (g.degree() > 0 && g.degree() < w.degree()) {
                        next.push_back(g);
                        next.push_back((w / g).monic());
                    } else {
                        next.push_back(w);
                    }
                }
                parts = std::move(next);
            }
            refined.insert(refined.end(), parts.begin(), parts.end());
        }
        factors = std::move(refined);
    }
    if (factors.size() != count) throw Error(ErrorKind::InternalError, "Berlekamp split incomplete");
    return factors;
}

// ---- rationals -------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // low degree first

ZPoly primitive_integer(const UPoly& f)
{
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    ZPoly z;
    for (const auto& c : f.coeffs()) {
        mpq_class scaled = c.rational() * den;
        z.push_back(scaled.get_num());
    }
    mpz_class content = 0;
    for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 0)
        for (auto& c : z) c /= content;
    if (z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

UPoly to_rational(const ZPoly& z)
{
    const Field q = Field::rationals();
    std::vector<FieldElem> v;
    for (const auto& c : z) v.push_back(q.from_integer(c));
    return UPoly(q, std::move(v));
}

std::vector<mpz_class> positive_divisors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> divs{1};
    auto add_prime_power = [&](const mpz_class& p, unsigned e) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    };
    for (mpz_class p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) add_prime_power(p, e);
    }
    if (n > 1) add_prime_power(n, 1);
    std::sort(divs.begin(), divs.end());
    return divs;
}

mpz_class eval_z(const ZPoly& z, long x)
{
    mpz_class acc = 0;
    for (std::size_t i = z.size(); i-- > 0;) acc = acc * x + z[i];
    return acc;
}

constexpr unsigned long rational_search_budget = 50'000'000;
constexpr long kronecker_radius = 12;

// Searches for a primitive integer factor of degree m by Kronecker's method:
// such a factor is fixed by its values at m + 1 integer points, and each of
// those values divides the value of f there. Returns true and writes the
// factor to `found` on success.
bool find_integer_factor(const ZPoly& f, std::size_t m, ZPoly& found, unsigned long& budget)
{
    const UPoly fq = to_rational(f);
    const Field q = Field::rationals();

    // Points with the fewest divisors keep the enumeration small.
    struct Point {
        long x;
        std::vector<mpz_class> divisors;
    };
    std::vector<Point> points;
    for (long x = -kronecker_radius; x <= kronecker_radius; ++x) {
        const mpz_class v = eval_z(f, x);
        if (v == 0) continue;
        points.push_back({x, positive_divisors(v)});
    }
    if (points.size() < m + 1) return false;
    std::stable_sort(points.begin(), points.end(),
                     [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });
    points.resize(m + 1);

    // Lagrange basis on the chosen points.
    std::vector<UPoly> basis;
    for (std::size_t i = 0; i <= m; ++i) {
        UPoly l = UPoly::constant(q.one());
        for (std::size_t j = 0; j <= m; ++j) {
            if (j == i) continue;
            l = l * UPoly::linear(q.from_int(points[j].x));
            l = l.scaled(q.from_int(points[i].x - points[j].x).inverse());
        }
        basis.push_back(std::move(l));
    }

    // g and -g are both factors, so the first value is taken positive.
    std::vector<std::size_t> idx(m + 1, 0);
    auto choices = [&](std::size_t i) { return points[i].divisors.size() * (i == 0 ? 1 : 2); };
    while (true) {
        if (budget-- == 0)
            throw Error(ErrorKind::DegreeTooLarge, "factor search over Q exceeded its budget");
        UPoly g(q);
        for (std::size_t i = 0; i <= m; ++i) {
            const auto& divs = points[i].divisors;
            const mpz_class v = idx[i] < divs.size() ? divs[idx[i]] : mpz_class(-divs[idx[i] - divs.size()]);
            g = g + basis[i].scaled(q.from_integer(v));
        }
        bool integral = g.degree() == static_cast<long>(m);
        for (const auto& c : g.coeffs()) integral = integral && c.rational().get_den() == 1;
        if (integral && f.back() % g.lead().rational().get_num() == 0 && (fq % g).is_zero()) {
            found = primitive_integer(g);
            return true;
        }
        std::size_t i = 0;
        while (i <= m && idx[i] + 1 == choices(i)) idx[i++] = 0;
        if (i > m) return false;
        ++idx[i];
    }
}

void factor_integer_squarefree(const ZPoly& f, std::vector<UPoly>& out, unsigned long& budget)
{
    const std::size_t n = f.size() - 1;
    if (n == 0) return;
    if (n == 1) {
        out.push_back(to_rational(f).monic());
        return;
    }
    if (f.front() == 0) {
        out.push_back(UPoly::monomial(Field::rationals().one(), 1));
        factor_integer_squarefree(ZPoly(f.begin() + 1, f.end()), out, budget);
        return;
    }
    // Rational roots a/b with a | f(0), b | lead.
    const UPoly fq = to_rational(f);
    const Field q = Field::rationals();
    for (const auto& b : positive_divisors(f.back())) {
        for (const auto& a : positive_divisors(f.front())) {
            for (int sign : {1, -1}) {
                const FieldElem root = q.from_fraction(a * sign, b);
                if (!fq.eval(root).is_zero()) continue;
                out.push_back(UPoly::linear(root));
                factor_integer_squarefree(primitive_integer(fq / UPoly::linear(root)), out, budget);
                return;
            }
        }
    }
    for (std::size_t m = 2; 2 * m <= n; ++m) {
        ZPoly g;
        if (find_integer_factor(f, m, g, budget)) {
            factor_integer_squarefree(g, out, budget);
            factor_integer_squarefree(primitive_integer(fq / to_rational(g)), out, budget);
            return;
        }
    }
    out.push_back(fq.monic());
}

}  // namespace

FactorList squarefree_decomposition(const UPoly& f_in)
{
    if (f_in.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree decomposition of zero");
    const UPoly f = f_in.monic();
    FactorList out;
    if (f.degree() == 0) return out;

    UPoly c = gcd(f, f.derivative());
    UPoly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        UPoly y = gcd(w, c);
        UPoly fac = (w / y).monic();
        if (fac.degree() > 0) out.emplace_back(fac, i);
        ++i;
        w = y;
        c = (c / y).monic();
    }
    if (c.degree() > 0) {
        // Only in characteristic p: c is a polynomial in X^p.
        const std::uint32_t p = f.field().characteristic();
        if (p == 0) throw Error(ErrorKind::InternalError, "squarefree decomposition left a remainder over Q");
        append(out, squarefree_decomposition(pth_root(c, p)), p);
    }
    return out;
}

FactorList factor_irreducible(const UPoly& f)
{
    if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "factorization expects a monic polynomial");
    FactorList out;
    unsigned long budget = rational_search_budget;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        std::vector<UPoly> irreducibles;
        if (f.field().is_prime())
            irreducibles = berlekamp(part);
        else
            factor_integer_squarefree(primitive_integer(part), irreducibles, budget);
        for (auto& g : irreducibles) out.emplace_back(std::move(g), mult);
    }
    // The same irreducible can come from different squarefree parts in
    // characteristic p; merge those.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return factor_order(a.first, b.first); });
    FactorList merged;
    for (auto& fm : out) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(std::move(fm));
    }
    return merged;
}

FactorList factor_by_trial_division(const UPoly& f)
{
    if (!f.field().is_prime()) throw Error(ErrorKind::UnsupportedField, "trial division needs a prime field");
    if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "factorization expects a monic polynomial");
    const Field field = f.field();
    const std::uint32_t p = field.characteristic();
    FactorList out;
    UPoly rem = f;
    for (long d = 1; 2 * d <= rem.degree(); ++d) {
        std::vector<std::uint32_t> digits(static_cast<std::size_t>(d), 0);
        while (true) {
            std::vector<FieldElem> v;
            for (auto x : digits) v.push_back(field.from_int(x));
            v.push_back(field.one());
            const UPoly cand(field, std::move(v));
            unsigned mult = 0;
            while (rem.degree() >= cand.degree()) {
                auto [quot, r] = rem.divmod(cand);
                if (!r.is_zero()) break;
                rem = std::move(quot);
                ++mult;
            }
            if (mult) out.emplace_back(cand, mult);
            std::size_t i = 0;
            while (i < digits.size() && digits[i] == p - 1) digits[i++] = 0;
            if (i == digits.size()) break;
            ++digits[i];
        }
    }
    if (rem.degree() > 0) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& fm) { return fm.first == rem; });
        if (it != out.end())
            ++it->second;
        else
            out.emplace_back(rem, 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return factor_order(a.first, b.first); });
    return out;
}

}  // namespace weier

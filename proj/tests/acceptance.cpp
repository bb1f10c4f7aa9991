// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "support/gen.hpp"
#include "weier/cli.hpp"
#include "weier/distinguish.hpp"
#include "weier/error.hpp"
#include "weier/factorize.hpp"
#include "weier/norms.hpp"
#include "weier/weierstrass.hpp"

using namespace weier;

namespace {

struct Outcome {
    long instances = 0;
    long failures = 0;
    std::string first_failure;
    std::string note;

    void check(bool ok, const std::string& what)
    {
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
};

std::string shape(const Field& f, std::size_t n, std::uint32_t prec)
{
    return f.describe() + " n=" + std::to_string(n) + " N=" + std::to_string(prec);
}

bool xn_degree_below(const Series& r, std::uint32_t s) { return !deg_xn(r) || *deg_xn(r) < s; }

struct DivisionCase {
    Series f, g;
    GrowthFn lam;
    std::uint32_t s;
};

// Criteria 1 and 6 share their instances.
std::vector<DivisionCase> division_cases()
{
    gen::Rng rng(1001);
    std::vector<DivisionCase> cases;
    for (int i = 0; i < 600; ++i) {
        const Field f = i % 2 == 0 ? Field::prime(7) : Field::rationals();
        const auto n = static_cast<std::size_t>(1 + (i / 2) % 3);
        const auto prec = static_cast<std::uint32_t>(gen::uniform(rng, 1, 8));
        auto d = gen::distinguished(f, n, prec, rng);
        cases.push_back({gen::series(f, n, prec, rng), std::move(d.g), gen::growth(rng), d.s});
    }
    return cases;
}

Outcome oracle_equivalence(const std::vector<DivisionCase>& cases)
{
    Outcome o;
    long nontrivial = 0;
    std::uint32_t most = 0;
    for (const auto& c : cases) {
        ++o.instances;
        const std::string where = shape(c.f.field(), c.f.nvars(), c.f.prec()) + " f=" + render(c.f) + " g=" + render(c.g);
        const auto fast = divide(c.f, c.g, c.lam);
        if (c.s > 0 && !fast.q.is_zero() && !fast.r.is_zero()) ++nontrivial;
        most = std::max(most, fast.iterations);
        const auto slow = divide_oracle(c.f, c.g);
        o.check(fast.q == slow.q && fast.r == slow.r, "divide != divide_oracle for " + where);
        o.check(fast.q * c.g + fast.r == c.f, "q g + r != f for " + where);
        o.check(fast.s == c.s && xn_degree_below(fast.r, c.s), "deg r >= s for " + where);
    }
    o.note = std::to_string(nontrivial) + " with s > 0, q != 0, r != 0; max iterations " + std::to_string(most);
    return o;
}

Outcome contraction_certificate(const std::vector<DivisionCase>& cases)
{
    Outcome o;
    mpq_class tightest;
    bool have_tightest = false;
    for (const auto& c : cases) {
        ++o.instances;
        const std::string where = "f=" + render(c.f) + " g=" + render(c.g) + " lambda=" + c.lam.describe();
        const auto d = divide(c.f, c.g, c.lam);
        if (!d.certificate) {
            o.check(false, "no certificate for " + where);
            continue;
        }
        const auto& cert = *d.certificate;
        o.check(cert.h_norm.is_bottom() || cert.h_norm.exponent() < cert.cn_s, "||h|| >= c_n s for " + where);

        // Recompute the bound from the certificate's norms.
        std::uint64_t bound = 1;
        if (cert.rate && !cert.tau_f_norm.is_bottom()) {
            const mpq_class top = cert.tau_f_norm.exponent() + c.lam(c.f.prec() - 1);
            mpq_class ratio = top / (-*cert.rate);
            mpz_class ceil_ratio;
            mpz_cdiv_q(ceil_ratio.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
            bound = ceil_ratio > 0 ? ceil_ratio.get_ui() + 1 : 1;
            const mpq_class slack = mpq_class(bound) - d.iterations;
            if (!have_tightest || slack < tightest) tightest = slack, have_tightest = true;
        }
        o.check(cert.iteration_bound == bound, "stored bound differs from recomputed bound for " + where);
        o.check(d.iterations <= bound, "iterations " + std::to_string(d.iterations) + " > bound " + std::to_string(bound) +
                                          " for " + where);
    }
    if (have_tightest) o.note = "min(bound - iterations) = " + tightest.get_str();
    return o;
}

Outcome preparation_round_trip()
{
    Outcome o;
    gen::Rng rng(2002);
    for (int i = 0; i < 240; ++i) {
        ++o.instances;
        const Field f = gen::field(rng);
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto prec = static_cast<std::uint32_t>(gen::uniform(rng, 1, 8));
        const auto d = gen::distinguished(f, n, prec, rng);
        const GrowthFn lam = gen::growth(rng);
        const std::string where = shape(f, n, prec) + " g=" + render(d.g);
        const auto p = prepare(d.g, lam);
        o.check(p.unit * p.omega == d.g, "e omega != g for " + where);
        o.check(weierstrass_degree(p.omega) == d.s, "omega not monic of degree s for " + where);
        o.check(is_distinguished(p.omega) == d.s, "omega not distinguished of degree s for " + where);
        const auto again = prepare(d.g, lam);
        o.check(again.omega == p.omega && again.unit == p.unit, "repeated preparation differs for " + where);
        const auto fixed = prepare(p.omega, lam);
        o.check(fixed.omega == p.omega && fixed.unit == Series::constant(f, n, prec, f.one()),
                "preparing omega again is not (omega, 1) for " + where);
    }
    return o;
}

Outcome unit_inversion()
{
    Outcome o;
    gen::Rng rng(3003);
    long bounded = 0;
    for (int i = 0; i < 240; ++i) {
        ++o.instances;
        const Field f = gen::field(rng);
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto prec = static_cast<std::uint32_t>(gen::uniform(rng, 1, 8));
        const GrowthFn lam = gen::growth(rng);
        // Half of the units are built inside the closed unit ball of the
        // weighted norm so that the norm implication is exercised.
        std::vector<mpq_class> c;
        for (std::size_t v = 0; v < n; ++v) c.push_back(mpq_class(gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 4)));
        const Weights w(c);
        Series u = gen::unit(f, n, prec, rng);
        if (i % 2 == 0) {
            std::vector<Term> kept;
            for (const auto& t : u.terms())
                if (w.dot(t.mono) <= lam(t.mono.y())) kept.push_back(t);
            u = Series::from_terms(f, n, prec, std::move(kept));
            if (reduce_mod_y(u).is_zero()) u += Series::constant(f, n, prec, f.one());
        }
        const std::string where = shape(f, n, prec) + " u=" + render(u);
        const Series inv = invert_unit(u);
        o.check(u * inv == Series::constant(f, n, prec, f.one()), "u u^-1 != 1 for " + where);
        const NormExp nu = norm_weighted(u, lam, w);
        if (!nu.is_bottom() && nu.exponent() <= 0) {
            ++bounded;
            const NormExp ni = norm_weighted(inv, lam, w);
            o.check(ni.is_bottom() || ni.exponent() <= 0, "||u^-1|| > 1 although ||u|| <= 1 for " + where);
        }
    }
    o.note = std::to_string(bounded) + " instances with ||u|| <= 1";
    return o;
}

Outcome norm_axioms()
{
    Outcome o;
    gen::Rng rng(4004);
    long y_only = 0;
    for (int i = 0; i < 1200; ++i) {
        ++o.instances;
        const Field f = gen::field(rng);
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto prec = static_cast<std::uint32_t>(gen::uniform(rng, 1, 8));
        const GrowthFn lam = gen::growth(rng);
        std::vector<mpq_class> c;
        for (std::size_t v = 0; v < n; ++v) c.push_back(mpq_class(gen::uniform(rng, 1, 5), gen::uniform(rng, 1, 5)));
        const Weights w(c);
        const Series a = gen::series(f, n, prec, rng), b = gen::series(f, n, prec, rng);
        const std::string where = shape(f, n, prec) + " a=" + render(a) + " b=" + render(b);

        o.check(norm_lambda(a + b, lam) <= max(norm_lambda(a, lam), norm_lambda(b, lam)), "|a+b| > max for " + where);
        o.check(norm_weighted(a + b, lam, w) <= max(norm_weighted(a, lam, w), norm_weighted(b, lam, w)),
                "||a+b|| > max for " + where);
        o.check(norm_lambda(a * b, lam) <= norm_lambda(a, lam) + norm_lambda(b, lam), "|ab| > |a||b| for " + where);
        o.check(norm_weighted(a * b, lam, w) <= norm_weighted(a, lam, w) + norm_weighted(b, lam, w),
                "||ab|| > ||a|| ||b|| for " + where);

        // X-free pairs: exponent(ab) = -lambda(ord a + ord b).
        std::vector<Term> ta, tb;
        for (std::uint32_t k = 0; k < prec; ++k) {
            ta.push_back({Monomial(k, std::vector<std::uint32_t>(n, 0)), gen::elem(f, rng)});
            tb.push_back({Monomial(k, std::vector<std::uint32_t>(n, 0)), gen::elem(f, rng)});
        }
        const Series ya = Series::from_terms(f, n, prec, ta), yb = Series::from_terms(f, n, prec, tb);
        const auto oa = ord_y(ya), ob = ord_y(yb);
        if (oa && ob && *oa + *ob < prec) {
            ++y_only;
            o.check(norm_lambda(ya * yb, lam) == NormExp::of(-lam(*oa + *ob)),
                    "|ab| != p^(-lambda(ord a + ord b)) for a=" + render(ya) + " b=" + render(yb));
        }
    }
    o.note = std::to_string(y_only) + " X-free pairs with nonzero product";
    return o;
}

Series with_xn_term(const Series& s, gen::Rng& rng)
{
    const Field& f = s.field();
    Monomial m(s.nvars());
    m.set_x(s.nvars() - 1, static_cast<std::uint32_t>(gen::uniform(rng, 1, 2)));
    if (s.nvars() > 1) m.set_x(0, static_cast<std::uint32_t>(gen::uniform(rng, 0, 1)));
    return s + Series::monomial(f, s.nvars(), s.prec(), gen::nonzero(f, rng), m);
}

Outcome automorphisms()
{
    Outcome o;
    {
        ++o.instances;
        const Series f = parse_series("X1*X2", Field::rationals(), 2, 3);
        const AutoMap sigma = build_sigma(f);
        o.check(sigma.d() == std::vector<std::uint32_t>{3, 1} && sigma.s() == 4, "X1 X2 does not give d=(3,1), s=4");
        o.check(is_distinguished(apply_map(sigma, f)) == 4u, "image of X1 X2 not distinguished of degree 4");
    }
    gen::Rng rng(5005);
    while (o.instances < 240) {
        const Field f = gen::field(rng);
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto prec = static_cast<std::uint32_t>(gen::uniform(rng, 1, 4));
        const Series s = with_xn_term(gen::series(f, n, prec, rng, {4, 2}), rng);
        const Series s0 = reduce_mod_y(s);
        bool has_xn = false;
        for (const auto& t : s0.terms()) has_xn = has_xn || t.mono.xn() > 0;
        if (!has_xn) continue;
        ++o.instances;
        const std::string where = shape(f, n, prec) + " f=" + render(s);
        const AutoMap sigma = build_sigma(s);
        std::uint64_t dot = 0;
        for (std::size_t v = 0; v < n; ++v) dot += std::uint64_t{sigma.d()[v]} * sigma.nu()[v];
        const Series image = apply_map(sigma, s);
        o.check(sigma.s() == dot, "s != sum d_i nu_i for " + where);
        o.check(is_distinguished(image) == sigma.s(), "sigma(f) not distinguished of degree s for " + where);
        o.check(apply_map(sigma.inverse(), image) == s, "sigma^-1 sigma != id for " + where);
    }
    return o;
}

// Monic of the given degree whose image mod Y is irreducible, by the
// exhaustive trial-division oracle.
UPoly irreducible(const Field& f, long degree, gen::Rng& rng)
{
    while (true) {
        const UPoly p = gen::upoly(f, degree, true, rng);
        const FactorList fl = factor_by_trial_division(p);
        if (fl.size() == 1 && fl[0].second == 1) return p;
    }
}

Outcome factorization()
{
    Outcome o;
    const Field f7 = Field::prime(7);
    const GrowthFn lam = GrowthFn::linear(1);
    gen::Rng rng(7007);
    std::map<std::size_t, long> by_count;
    while (o.instances < 120) {
        const auto prec = static_cast<std::uint32_t>(gen::uniform(rng, 1, 6));
        const auto d = static_cast<std::uint32_t>(gen::uniform(rng, 0, std::min<long>(2, prec - 1)));
        const std::uint32_t inner = prec - d;

        std::vector<UPoly> mod_y;
        long total = 0;
        const long parts = gen::uniform(rng, 1, 3);
        for (long k = 0; k < parts; ++k) {
            const long deg = gen::uniform(rng, 1, 2);
            if (total + deg > 6) break;
            const UPoly p = irreducible(f7, deg, rng);
            bool coprime = true;
            for (const auto& q : mod_y) coprime = coprime && gcd(p, q).is_one();
            if (!coprime) continue;
            mod_y.push_back(p);
            total += deg;
        }
        std::vector<Series> lifted;
        Series product = Series::constant(f7, 1, inner, f7.one());
        for (const auto& p : mod_y) {
            // Perturb below the leading term so the factor stays monic.
            Series a = to_series(p, inner);
            if (inner > 1)
                for (long e = 0; e < p.degree(); ++e)
                    for (std::uint32_t k = 1; k < inner; ++k)
                        a += Series::monomial(f7, 1, inner, gen::elem(f7, rng), Monomial(k, std::vector<std::uint32_t>{static_cast<std::uint32_t>(e)}));
            lifted.push_back(a);
            product *= a;
        }
        const Series unit = gen::unit(f7, 1, inner, rng, {3, 2});
        const Series f = shift_y(unit * product, d);
        ++o.instances;
        const std::string where = "N=" + std::to_string(prec) + " f=" + render(f);

        const Factorization fz = factor_series(f, lam);
        o.check(expand(fz) == f, "product check failed for " + where);
        o.check(fz.y_power == d, "wrong Y-power for " + where);
        o.check(fz.unit == unit, "wrong unit for " + where);
        ++by_count[fz.factors.size()];
        std::vector<std::string> got, want;
        for (const auto& fac : fz.factors) {
            o.check(fac.status == FactorStatus::LiftedCoprime && fac.multiplicity == 1, "unexpected status for " + where);
            got.push_back(render(fac.series));
        }
        for (const auto& a : lifted) want.push_back(render(a));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        o.check(got == want, "factor multiset differs for " + where);
    }

    for (const auto& [k, v] : by_count) o.note += std::to_string(v) + " with " + std::to_string(k) + " factor(s); ";
    ++o.instances;
    const Factorization eis = factor_series(parse_series("X^2 - Y", Field::rationals(), 1, 4), lam);
    o.check(eis.factors.size() == 1 && eis.factors[0].status == FactorStatus::UnsplitBlock,
            "X^2 - Y over Q is not a single unsplit block");

    ++o.instances;
    const Factorization sq = factor_series(parse_series("X^2 - 1 - Y", f7, 1, 3), lam);
    const Series root = parse_series("1 + 4*Y + 6*Y^2", f7, 1, 3);
    const Series x = parse_series("X", f7, 1, 3);
    o.check(sq.factors.size() == 2 && sq.factors[0].series == x + root && sq.factors[1].series == x - root,
            "X^2 - (1+Y) over F_7 does not split as X -+ (1 + 4Y + 6Y^2)");
    return o;
}

Outcome precision_stability()
{
    Outcome o;
    gen::Rng rng(8008);
    for (int i = 0; i < 150; ++i) {
        ++o.instances;
        const Field f = gen::field(rng);
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto prec = static_cast<std::uint32_t>(gen::uniform(rng, 1, 8));
        const GrowthFn lam = gen::growth(rng);
        const auto d = gen::distinguished(f, n, prec, rng);
        const Series num = gen::series(f, n, prec, rng);
        const Series u = gen::unit(f, n, prec, rng);
        const std::string where = shape(f, n, prec) + " f=" + render(num) + " g=" + render(d.g);

        const auto div = divide(num, d.g, lam);
        const auto ora = divide_oracle(num, d.g);
        const auto prep = prepare(d.g, lam);
        const Series inv = invert_unit(u);
        for (std::uint32_t m = 1; m <= prec; ++m) {
            const Series fm = truncate(num, m), gm = truncate(d.g, m);
            const auto div_m = divide(fm, gm, lam);
            o.check(div_m.q == truncate(div.q, m) && div_m.r == truncate(div.r, m),
                    "divide unstable at M=" + std::to_string(m) + " for " + where);
            const auto ora_m = divide_oracle(fm, gm);
            o.check(ora_m.q == truncate(ora.q, m) && ora_m.r == truncate(ora.r, m),
                    "divide_oracle unstable at M=" + std::to_string(m) + " for " + where);
            const auto prep_m = prepare(gm, lam);
            o.check(prep_m.omega == truncate(prep.omega, m) && prep_m.unit == truncate(prep.unit, m),
                    "prepare unstable at M=" + std::to_string(m) + " for " + where);
            o.check(invert_unit(truncate(u, m)) == truncate(inv, m),
                    "invert unstable at M=" + std::to_string(m) + " for u=" + render(u));
        }
    }
    return o;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_determinism()
{
    Outcome o;
    const std::string dir = WEIER_GOLDEN_DIR;
    const auto cases = nlohmann::json::parse(read_file(dir + "/cases.json"));
    for (const auto& c : cases) {
        ++o.instances;
        const std::string name = c["name"];
        const auto args = c["args"].get<std::vector<std::string>>();
        const RunResult first = run(args), second = run(args);
        o.check(first.out == second.out && first.exit_code == second.exit_code, "two runs differ for " + name);
        const std::string transcript = "exit " + std::to_string(first.exit_code) + "\n" + first.out;
        o.check(transcript == read_file(dir + "/" + name + ".out"), "golden mismatch for " + name);
    }
    o.check(cases.size() >= 12, "fewer than 12 golden transcripts");
    const long transcripts = o.instances;

    gen::Rng rng(9009);
    for (int i = 0; i < 600; ++i) {
        ++o.instances;
        const Field f = gen::field(rng);
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const auto prec = static_cast<std::uint32_t>(gen::uniform(rng, 1, 8));
        const Series a = gen::series(f, n, prec, rng, {8, 4});
        o.check(parse_series(render(a), f, n, prec) == a, "parse(render(a)) != a for " + render(a));
    }
    o.note = std::to_string(transcripts) + " transcripts, " + std::to_string(o.instances - transcripts) + " round trips";
    return o;
}

}  // namespace

int main()
{
    const auto cases = division_cases();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 oracle equivalence", [&] { return oracle_equivalence(cases); }},
        {"2 preparation round-trip", preparation_round_trip},
        {"3 unit inversion", unit_inversion},
        {"4 norm axioms", norm_axioms},
        {"5 automorphism theorem", automorphisms},
        {"6 contraction certificate", [&] { return contraction_certificate(cases); }},
        {"7 factorization", factorization},
        {"8 precision stability", precision_stability},
        {"9 CLI determinism and round-trip", cli_determinism},
    };
    const std::map<std::string, long> minimum = {
        {"1 oracle equivalence", 500}, {"2 preparation round-trip", 200}, {"3 unit inversion", 200},
        {"4 norm axioms", 1000},       {"5 automorphism theorem", 200},   {"6 contraction certificate", 500},
        {"7 factorization", 100},      {"8 precision stability", 100},    {"9 CLI determinism and round-trip", 512},
    };

    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        o.check(o.instances >= minimum.at(name), "only " + std::to_string(o.instances) + " instances");
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.failures == 0;
        failed += pass ? 0 : 1;
        std::printf("criterion %-34s %s  instances=%ld  %.2fs%s%s\n", name.c_str(), pass ? "PASS" : "FAIL", o.instances,
                    secs, o.note.empty() ? "" : "  ", o.note.c_str());
        if (!pass) std::printf("    %ld failure(s); first: %s\n", o.failures, o.first_failure.c_str());
    }
    return failed == 0 ? 0 : 1;
}

#include "weier/cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weier/distinguish.hpp"
#include "weier/error.hpp"
#include "weier/factorize.hpp"
#include "weier/growth.hpp"
#include "weier/norms.hpp"
#include "weier/weierstrass.hpp"

namespace weier {

namespace {

using json = nlohmann::ordered_json;

class Parser {
public:
    Parser(std::string_view text, const Field& field, std::size_t nvars, std::uint32_t prec)
        : s_(text), field_(field), nvars_(nvars), prec_(prec)
    {
    }

    Series parse()
    {
        std::vector<Term> terms;
        skip_space();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        terms.push_back(term(negative));
        while (true) {
            skip_space();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return Series::from_terms(field_, nvars_, prec_, std::move(terms));
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_), pos_);
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::uint32_t nat()
    {
        skip_space();
        const std::size_t start = pos_;
        const std::string d = digits();
        if (d.empty()) fail("expected a natural number");
        const mpz_class v(d);
        if (v > std::numeric_limits<std::uint32_t>::max()) {
            pos_ = start;
            fail("exponent too large");
        }
        return static_cast<std::uint32_t>(v.get_ui());
    }

    FieldElem coeff()
    {
        const std::size_t start = pos_;
        const mpz_class num(digits());
        skip_space();
        if (peek() != '/') return field_.from_integer(num);
        ++pos_;
        skip_space();
        const std::string den = digits();
        if (den.empty())
            throw Error(ErrorKind::CoefficientParseError,
                        "missing denominator at position " + std::to_string(pos_), pos_);
        try {
            return field_.from_fraction(num, mpz_class(den));
        } catch (const Error&) {
            throw Error(ErrorKind::CoefficientParseError,
                        "zero denominator in coefficient at position " + std::to_string(start), start);
        }
    }

    void factor(Monomial& m)
    {
        skip_space();
        const std::size_t start = pos_;
        const char c = peek();
        if (c == 'Y') {
            ++pos_;
            std::uint32_t e = 1;
            if (power()) e = nat();
            const std::uint64_t k = std::uint64_t{m.y()} + e;
            if (k >= prec_)
                throw Error(ErrorKind::YExponentExceedsPrecision,
                            "Y exponent " + std::to_string(k) + " is not below the precision " + std::to_string(prec_) +
                                " at position " + std::to_string(start),
                            start);
            m.set_y(static_cast<std::uint32_t>(k));
            return;
        }
        if (c != 'X') fail("expected X or Y");
        ++pos_;
        std::size_t var = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::string d = digits();
            const mpz_class v(d);
            if (v < 1 || v > nvars_) {
                pos_ = start;
                fail("variable X" + d + " out of range for " + std::to_string(nvars_) + " variable(s)");
            }
            var = v.get_ui();
        } else if (nvars_ != 1) {
            fail("X needs an index when there are several variables");
        }
        std::uint32_t e = 1;
        if (power()) e = nat();
        const std::uint64_t total = std::uint64_t{m.x(var - 1)} + e;
        if (total > std::numeric_limits<std::uint32_t>::max()) {
            pos_ = start;
            fail("exponent too large");
        }
        m.set_x(var - 1, static_cast<std::uint32_t>(total));
    }

    bool power()
    {
        skip_space();
        if (peek() != '^') return false;
        ++pos_;
        return true;
    }

    Term term(bool negative)
    {
        skip_space();
        Monomial m(nvars_);
        FieldElem c = field_.one();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = coeff();
            skip_space();
            if (peek() != '*') return {std::move(m), negative ? -c : c};
            ++pos_;
        }
        factor(m);
        while (true) {
            skip_space();
            if (peek() != '*') break;
            ++pos_;
            factor(m);
        }
        return {std::move(m), negative ? -c : c};
    }

    std::string_view s_;
    Field field_;
    std::size_t nvars_;
    std::uint32_t prec_;
    std::size_t pos_ = 0;
};

std::string rational(const mpq_class& q) { return q.get_str(); }

json norm_json(const NormExp& e)
{
    if (e.is_bottom()) return json{{"zero", true}};
    return json{{"exp", rational(e.exponent())}};
}

json weights_json(const std::optional<Weights>& w)
{
    if (!w) return nullptr;
    json out = json::array();
    for (const auto& c : w->values()) out.push_back(rational(c));
    return out;
}

json division_json(const DivisionResult& d)
{
    return json{{"q", render(d.q)},
                {"r", render(d.r)},
                {"s", d.s},
                {"iterations", d.iterations},
                {"weights", weights_json(d.weights_used)}};
}

json certificate_json(const ContractionCertificate& c)
{
    return json{{"h_norm", norm_json(c.h_norm)},
                {"tau_f_norm", norm_json(c.tau_f_norm)},
                {"cn_s", rational(c.cn_s)},
                {"rate", c.rate ? json(rational(*c.rate)) : json(nullptr)},
                {"iteration_bound", c.iteration_bound}};
}

json series_list(const std::vector<Series>& v)
{
    json out = json::array();
    for (const auto& s : v) out.push_back(render(s));
    return out;
}

struct Options {
    std::string verb;
    std::vector<std::string> inputs;
    std::string field = "Q";
    std::string lambda = "linear:1";
    std::uint32_t prec = 8;
    std::size_t nvars = 1;
    std::string weights;
    std::string constant = "1";
    std::uint32_t k0 = 0;
    std::uint32_t bound = 64;
    std::uint32_t d = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::pair<std::string, std::size_t>> verbs = {
    {"norm", 1},     {"wnorm", 1},      {"invert", 1},   {"divide", 2},           {"divide-oracle", 2},
    {"prepare", 1},  {"reduce", 2},     {"distinguish", 1}, {"is-distinguished", 1}, {"factor", 1},
    {"member", 1},   {"validate-lambda", 0},
};

mpq_class parse_rational(const std::string& text, const char* what)
{
    try {
        mpq_class q(text);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("invalid rational for ") + what + ": " + text);
    }
}

Weights parse_weights(const std::string& text)
{
    std::vector<mpq_class> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_rational(item, "--weights"));
    return Weights(std::move(c));
}

void require_valid(const GrowthFn& lam, std::uint32_t prec)
{
    const GrowthReport report = validate(lam, std::max<std::uint32_t>(2, 2 * prec));
    if (report.valid()) return;
    const GrowthViolation& v = report.violations.front();
    throw Error(ErrorKind::InvalidGrowth, "lambda " + lam.describe() + " is " + std::string(to_string(v.kind)) +
                                              " at x=" + std::to_string(v.x) + ", y=" + std::to_string(v.y));
}

struct Outcome {
    json result;
    json diagnostics = json::object();
};

// Kernel calls are made before any json is built from a braced list: GCC 11
// leaks list elements already constructed when a later one throws.
Outcome dispatch(const Options& o, std::ostream& log)
{
    if (o.prec < 1) throw Error(ErrorKind::InvalidPrecision, "precision must be at least 1");
    if (o.nvars < 1) throw Error(ErrorKind::ArityMismatch, "nvars must be at least 1");
    const Field field = parse_field(o.field);
    const GrowthFn lam = GrowthFn::parse(o.lambda);

    if (o.verb == "validate-lambda") {
        const GrowthReport report = validate(lam, o.bound);
        json violations = json::array();
        for (const auto& v : report.violations)
            violations.push_back(json{{"kind", std::string(to_string(v.kind))}, {"x", v.x}, {"y", v.y}});
        return {json{{"lambda", lam.describe()}, {"bound", report.bound}, {"valid", report.valid()},
                     {"violations", std::move(violations)}}};
    }

    require_valid(lam, o.prec);
    std::vector<Series> in;
    for (const auto& text : o.inputs) in.push_back(parse_series(text, field, o.nvars, o.prec));
    std::optional<Weights> weights;
    if (!o.weights.empty()) {
        weights = parse_weights(o.weights);
        if (weights->size() != o.nvars) throw Error(ErrorKind::ArityMismatch, "--weights needs one entry per variable");
    }

    if (o.verb == "norm") {
        const auto ord = ord_y(in[0]);
        const NormExp norm = norm_lambda(in[0], lam);
        return {json{{"norm", norm_json(norm)},
                     {"ord_y", ord ? json(*ord) : json(nullptr)}}};
    }
    if (o.verb == "wnorm") {
        if (!weights) throw UsageError("wnorm needs --weights");
        const NormExp norm = norm_weighted(in[0], lam, *weights);
        return {json{{"norm", norm_json(norm)}},
                json{{"weights", weights_json(weights)}}};
    }
    if (o.verb == "invert") {
        const Series inv = invert_unit(in[0]);
        return {json{{"series", render(inv)}}};
    }
    if (o.verb == "divide") {
        const DivisionResult d = divide(in[0], in[1], lam, weights);
        log << "divide: " << d.iterations << " contraction step(s)\n";
        Outcome out{division_json(d)};
        out.diagnostics["iterations"] = d.iterations;
        out.diagnostics["weights"] = weights_json(d.weights_used);
        out.diagnostics["s"] = d.s;
        if (d.certificate) out.diagnostics["certificate"] = certificate_json(*d.certificate);
        return out;
    }
    if (o.verb == "divide-oracle") {
        const DivisionResult d = divide_oracle(in[0], in[1]);
        Outcome out{division_json(d)};
        out.diagnostics["iterations"] = d.iterations;
        out.diagnostics["s"] = d.s;
        return out;
    }
    if (o.verb == "prepare") {
        const Preparation p = prepare(in[0], lam);
        Outcome out{json{{"omega", render(p.omega)}, {"unit", render(p.unit)}, {"s", p.s}}};
        out.diagnostics["iterations"] = p.division.iterations;
        out.diagnostics["weights"] = weights_json(p.division.weights_used);
        out.diagnostics["s"] = p.s;
        return out;
    }
    if (o.verb == "reduce") {
        const auto coords = reduce_mod_omega(in[0], in[1], o.d, lam);
        return {json{{"coordinates", series_list(coords)}, {"d", o.d}}};
    }
    if (o.verb == "distinguish") {
        const AutoMap sigma = build_sigma(in[0]);
        const Series image = apply_map(sigma, in[0]);
        const auto s = is_distinguished(image);
        Outcome out{json{{"d", sigma.d()}, {"t", sigma.t()}, {"nu", sigma.nu()}, {"s", sigma.s()},
                         {"image", render(image)}}};
        out.diagnostics["image_distinguished"] = s.has_value();
        return out;
    }
    if (o.verb == "is-distinguished") {
        const auto s = is_distinguished(in[0]);
        return {json{{"distinguished", s.has_value()}, {"s", s ? json(*s) : json(nullptr)}}};
    }
    if (o.verb == "factor") {
        const Factorization fz = factor_series(in[0], lam);
        json factors = json::array();
        for (const auto& f : fz.factors)
            factors.push_back(json{{"series", render(f.series)}, {"multiplicity", f.multiplicity},
                                   {"status", status_text(f)}});
        return {json{{"unit", render(fz.unit)}, {"y_power", fz.y_power}, {"factors", std::move(factors)}}};
    }
    if (o.verb == "member") {
        const mpq_class constant = parse_rational(o.constant, "--C");
        const MembershipReport r = membership_check(in[0], lam, constant, o.k0);
        json violations = json::array();
        for (const auto& v : r.violations)
            violations.push_back(json{{"k", v.k}, {"degree", v.degree}, {"bound", rational(v.bound)}});
        return {json{{"pass", r.pass()}, {"C", rational(r.constant)}, {"k0", r.k0}, {"prec", r.prec},
                     {"violations", std::move(violations)}}};
    }
    throw UsageError("unknown verb " + o.verb);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Series parse_series(std::string_view text, const Field& field, std::size_t nvars, std::uint32_t prec)
{
    if (prec < 1) throw Error(ErrorKind::InvalidPrecision, "precision must be at least 1");
    return Parser(text, field, nvars, prec).parse();
}

Field parse_field(std::string_view text)
{
    if (text == "Q") return Field::rationals();
    if (text.substr(0, 3) == "Fp:" && text.size() > 3 && text.size() < 14 &&
        std::all_of(text.begin() + 3, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return Field::prime(std::stoull(std::string(text.substr(3))));
    throw Error(ErrorKind::InvalidField, "field must be Q or Fp:<prime>, got '" + std::string(text) + "'");
}

RunResult run(const std::vector<std::string>& args)
{
    Options o;
    CLI::App app{"Exact Weierstrass division, preparation and factorization for truncated series", "weier"};
    std::vector<std::string> verb_names;
    for (const auto& [name, arity] : verbs) verb_names.push_back(name);
    app.add_option("verb", o.verb, "operation")->required()->check(CLI::IsMember(verb_names));
    app.add_option("inputs", o.inputs, "series arguments");
    app.add_option("--field", o.field, "Q or Fp:<p>")->capture_default_str();
    app.add_option("--lambda", o.lambda, "linear:a, pow:a, exp:b or table:v0,v1,...")->capture_default_str();
    app.add_option("--prec", o.prec, "precision N (series known mod Y^N)")->capture_default_str();
    app.add_option("--nvars", o.nvars, "number of X variables")->capture_default_str();
    app.add_option("--weights", o.weights, "comma-separated positive rationals, one per variable");
    app.add_option("--C", o.constant, "membership constant")->capture_default_str();
    app.add_option("--k0", o.k0, "first Y-level checked by member")->capture_default_str();
    app.add_option("--bound", o.bound, "sample bound for validate-lambda")->capture_default_str();
    app.add_option("--d", o.d, "Y-power for reduce")->capture_default_str();

    std::vector<const char*> argv{"weier"};
    for (const auto& a : args) argv.push_back(a.c_str());

    RunResult res;
    std::ostringstream out, err;
    auto usage = [&](const std::string& message) {
        err << "weier: " << message << "\n";
        res.exit_code = 1;
        res.out = dump(json{{"ok", false}, {"error", json{{"kind", "Usage"}, {"message", message}}}});
        res.err = err.str();
        return res;
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        return usage(e.what());
    }

    const auto verb = std::find_if(verbs.begin(), verbs.end(), [&](const auto& v) { return v.first == o.verb; });
    if (o.inputs.size() != verb->second)
        return usage(o.verb + " takes " + std::to_string(verb->second) + " series argument(s), got " +
                     std::to_string(o.inputs.size()));

    try {
        Outcome outcome = dispatch(o, err);
        res.out = dump(json{{"ok", true}, {"result", std::move(outcome.result)},
                            {"diagnostics", std::move(outcome.diagnostics)}});
    } catch (const UsageError& e) {
        return usage(e.what());
    } catch (const Error& e) {
        json error{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        if (e.position()) error["position"] = *e.position();
        err << "weier: " << to_string(e.kind()) << ": " << e.what() << "\n";
        res.exit_code = 2;
        res.out = dump(json{{"ok", false}, {"error", std::move(error)}});
    }
    res.err = err.str();
    return res;
}

}  // namespace weier

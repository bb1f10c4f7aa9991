#include "weier/growth.hpp"

#include <algorithm>
#include <charconv>

#include "weier/error.hpp"

namespace weier {

namespace {

mpq_class parse_rational(std::string_view text)
{
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw Error(ErrorKind::InvalidGrowth, "bad rational in growth spec: '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::InvalidGrowth, "zero denominator in growth spec");
    q.canonicalize();
    return q;
}

unsigned parse_unsigned(std::string_view text)
{
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(ErrorKind::InvalidGrowth, "bad integer in growth spec: '" + std::string(text) + "'");
    return v;
}

}  // namespace

GrowthFn GrowthFn::linear(const mpq_class& a)
{
    if (sgn(a) <= 0) throw Error(ErrorKind::InvalidGrowth, "linear growth needs a > 0");
    return GrowthFn(Family::Linear, a, {});
}

GrowthFn GrowthFn::power(unsigned a)
{
    if (a < 1) throw Error(ErrorKind::InvalidGrowth, "power growth needs a >= 1");
    return GrowthFn(Family::Power, mpq_class(a), {});
}

GrowthFn GrowthFn::exponential(unsigned b)
{
    if (b < 2) throw Error(ErrorKind::InvalidGrowth, "exponential growth needs b >= 2");
    return GrowthFn(Family::Exponential, mpq_class(b), {});
}

GrowthFn GrowthFn::table(std::vector<mpq_class> values)
{
    if (values.empty()) throw Error(ErrorKind::InvalidGrowth, "empty growth table");
    return GrowthFn(Family::Table, mpq_class(0), std::move(values));
}

GrowthFn GrowthFn::parse(std::string_view spec)
{
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw Error(ErrorKind::InvalidGrowth, "growth spec must look like family:param, got '" + std::string(spec) + "'");
    auto family = spec.substr(0, colon);
    auto arg = spec.substr(colon + 1);
    if (family == "linear") return linear(parse_rational(arg));
    if (family == "pow") return power(parse_unsigned(arg));
    if (family == "exp") return exponential(parse_unsigned(arg));
    if (family == "table") {
        std::vector<mpq_class> values;
        while (true) {
            auto comma = arg.find(',');
            values.push_back(parse_rational(arg.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            arg.remove_prefix(comma + 1);
        }
        return table(std::move(values));
    }
    throw Error(ErrorKind::InvalidGrowth, "unknown growth family '" + std::string(family) + "'");
}

std::uint32_t GrowthFn::max_k() const noexcept
{
    if (family_ == Family::Table)
        return std::min<std::uint32_t>(default_max_k, static_cast<std::uint32_t>(table_.size() - 1));
    return default_max_k;
}

mpq_class GrowthFn::operator()(std::uint32_t k) const
{
    if (k > max_k())
        throw Error(ErrorKind::OutOfRange, "growth function evaluated at " + std::to_string(k) +
                                               " beyond its range " + std::to_string(max_k()));
    switch (family_) {
    case Family::Linear:
        return param_ * k;
    case Family::Power: {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), k, param_.get_num().get_ui());
        return mpq_class(v);
    }
    case Family::Exponential: {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), param_.get_num().get_ui(), k);
        return mpq_class(v - 1);
    }
    case Family::Table:
        return table_[k];
    }
    return 0;
}

std::string GrowthFn::describe() const
{
    switch (family_) {
    case Family::Linear: return "linear:" + param_.get_str();
    case Family::Power: return "pow:" + param_.get_str();
    case Family::Exponential: return "exp:" + param_.get_str();
    case Family::Table: {
        std::string s = "table:";
        for (std::size_t i = 0; i < table_.size(); ++i) {
            if (i) s += ',';
            s += table_[i].get_str();
        }
        return s;
    }
    }
    return {};
}

std::string_view to_string(GrowthViolation::Kind kind)
{
    switch (kind) {
    case GrowthViolation::Kind::NonzeroAtZero: return "nonzero_at_zero";
    case GrowthViolation::Kind::NotStrictlyIncreasing: return "not_strictly_increasing";
    case GrowthViolation::Kind::NotSuperadditive: return "not_superadditive";
    }
    return "unknown";
}

GrowthReport validate(const GrowthFn& lam, std::uint32_t sample_bound)
{
    if (sample_bound < 2) throw Error(ErrorKind::OutOfRange, "sample bound must be >= 2");
    const std::uint32_t bound = std::min(sample_bound, lam.max_k());
    GrowthReport report{bound, {}};

    std::vector<mpq_class> v;
    v.reserve(bound + 1);
    for (std::uint32_t k = 0; k <= bound; ++k) v.push_back(lam(k));

    if (v[0] != 0) report.violations.push_back({GrowthViolation::Kind::NonzeroAtZero, 0, 0});
    for (std::uint32_t k = 0; k < bound; ++k)
        if (!(v[k] < v[k + 1]))
            report.violations.push_back({GrowthViolation::Kind::NotStrictlyIncreasing, k, k + 1});
    for (std::uint32_t x = 0; 2 * x <= bound; ++x)
        for (std::uint32_t y = x; x + y <= bound; ++y)
            if (v[x] + v[y] > v[x + y])
                report.violations.push_back({GrowthViolation::Kind::NotSuperadditive, x, y});
    return report;
}

}  // namespace weier

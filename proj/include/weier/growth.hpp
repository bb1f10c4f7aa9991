#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace weier {

// A growth function lambda sampled at nonnegative integers. All families
// produce exact rational values:
//   linear(a)       lambda(x) = a*x        (a > 0 rational)
//   power(a)        lambda(x) = x^a        (a >= 1)
//   exponential(b)  lambda(x) = b^x - 1    (b >= 2)
//   table(v)        lambda(k) = v[k]
class GrowthFn {
public:
    enum class Family { Linear, Power, Exponential, Table };

    static constexpr std::uint32_t default_max_k = 4096;

    static GrowthFn linear(const mpq_class& a);
    static GrowthFn power(unsigned a);
    static GrowthFn exponential(unsigned b);
    static GrowthFn table(std::vector<mpq_class> values);
    // Parses "linear:a", "pow:a", "exp:b" or "table:v0,v1,...".
    static GrowthFn parse(std::string_view spec);

    Family family() const noexcept { return family_; }

    // Throws OutOfRange past max_k or past the end of a table.
    mpq_class operator()(std::uint32_t k) const;

    // Largest k accepted by operator().
    std::uint32_t max_k() const noexcept;

    std::string describe() const;

private:
    GrowthFn(Family family, mpq_class param, std::vector<mpq_class> table)
        : family_(family), param_(std::move(param)), table_(std::move(table)) {}

    Family family_;
    mpq_class param_;
    std::vector<mpq_class> table_;
};

struct GrowthViolation {
    enum class Kind { NonzeroAtZero, NotStrictlyIncreasing, NotSuperadditive };
    Kind kind;
    std::uint32_t x;
    std::uint32_t y;
};

std::string_view to_string(GrowthViolation::Kind kind);

struct GrowthReport {
    std::uint32_t bound;
    std::vector<GrowthViolation> violations;

    bool valid() const { return violations.empty(); }
};

// Checks lambda(0) = 0, strict monotonicity on [0, bound] and
// lambda(x) + lambda(y) <= lambda(x + y) for 0 <= x <= y, x + y <= bound.
// Table functions are sampled only as far as the table reaches.
GrowthReport validate(const GrowthFn& lam, std::uint32_t sample_bound);

}  // namespace weier

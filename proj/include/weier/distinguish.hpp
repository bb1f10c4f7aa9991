#pragma once

#include <cstdint>
#include <vector>

#include "weier/series.hpp"

namespace weier {

// A substitution automorphism fixing Y.
//   elementary:      X_i -> X_i + X_j^d (one variable moves)
//   distinguishing:  X_i -> X_i + X_n^{d_i} for i < n, X_n fixed
// The inverse direction substitutes with a minus sign instead.
class AutoMap {
public:
    enum class Kind { Elementary, Distinguishing };
    enum class Direction { Forward, Inverse };

    // 1-based indices, i != j, d >= 1.
    static AutoMap elementary(std::size_t nvars, std::size_t i, std::size_t j, std::uint32_t d);
    // d.back() must be 1; s = sum d_i nu_i is recomputed and checked.
    static AutoMap distinguishing(std::vector<std::uint32_t> d, std::uint32_t t, std::vector<std::uint32_t> nu);

    Kind kind() const noexcept { return kind_; }
    Direction direction() const noexcept { return direction_; }
    std::size_t nvars() const noexcept { return nvars_; }
    AutoMap inverse() const;

    // Elementary data (1-based).
    std::size_t source() const noexcept { return i_; }
    std::size_t target() const noexcept { return j_; }
    std::uint32_t degree() const noexcept { return d_.empty() ? 0 : d_.front(); }

    // Distinguishing data.
    const std::vector<std::uint32_t>& d() const noexcept { return d_; }
    std::uint32_t t() const noexcept { return t_; }
    const std::vector<std::uint32_t>& nu() const noexcept { return nu_; }
    std::uint32_t s() const noexcept { return s_; }

private:
    AutoMap() = default;

    Kind kind_ = Kind::Elementary;
    Direction direction_ = Direction::Forward;
    std::size_t nvars_ = 0;
    std::size_t i_ = 0, j_ = 0;
    std::vector<std::uint32_t> d_;
    std::uint32_t t_ = 0;
    std::vector<std::uint32_t> nu_;
    std::uint32_t s_ = 0;
};

// Exponents d_n = 1, d_{n-j} = 1 + t * (d_n + ... + d_{n-j+1}).
std::vector<std::uint32_t> distinguishing_exponents(std::size_t nvars, std::uint32_t t);

// The distinguishing map for f: nu is the lex-largest exponent of a Y-free
// term, t the total X-degree of f mod Y. Requires a Y-free term with
// mu_n > 0 (for n = 1, any nonzero f mod Y); otherwise HypothesisFails.
AutoMap build_sigma(const Series& f);

// Exact substitution, expanded binomially with coefficients in the field.
Series apply_map(const AutoMap& sigma, const Series& f);

}  // namespace weier

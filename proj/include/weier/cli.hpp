#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weier/field.hpp"
#include "weier/series.hpp"

namespace weier {

// Series text grammar:
//   series := ['-'] term (('+'|'-') term)*
//   term   := coeff | [coeff '*'] factor ('*' factor)*
//   factor := ('X' index | 'Y') ['^' nat]
//   coeff  := integer | integer '/' integer
// With one variable, plain X is accepted and X1 is an alias for it.
// Errors: SyntaxError (with position), CoefficientParseError,
// YExponentExceedsPrecision.
Series parse_series(std::string_view text, const Field& field, std::size_t nvars, std::uint32_t prec);

// "Q" or "Fp:<p>".
Field parse_field(std::string_view text);

struct RunResult {
    int exit_code = 0;
    std::string out;  // one JSON document
    std::string err;  // human-readable log lines
};

// Runs one invocation; args excludes the program name. Exit codes: 0 on
// success, 1 on usage errors, 2 on kernel errors.
RunResult run(const std::vector<std::string>& args);

}  // namespace weier

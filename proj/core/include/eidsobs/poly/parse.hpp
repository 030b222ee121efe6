#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "eidsobs/poly/polynomial.hpp"

namespace eidsobs {

/// Integer values for template parameters such as k, l, q, r.
using ParamMap = std::map<std::string, std::int64_t, std::less<>>;

/// Parses polynomial text: integer or rational literals (`3`, `3/4`),
/// variables of `ctx`, binary `+ - * ^`, unary minus and parentheses.
/// Implicit multiplication is rejected. Exponents are non-negative integer
/// expressions built from literals, parameters in `params`, `+ - *` and
/// parentheses, e.g. `x^(k+1)`. An identifier naming a parameter may also
/// appear as an integer constant outside exponents.
///
/// Throws SyntaxError (with byte position) or Error(UnknownVariable).
Polynomial parse_poly(std::string_view src, const VarContext& ctx,
                      const ParamMap& params = {});

/// Evaluates an integer expression such as `3-k` or `2*k+2`.
std::int64_t evaluate_int_expr(std::string_view src, const ParamMap& params);

}  // namespace eidsobs

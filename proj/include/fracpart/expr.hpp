#pragma once

// Small exact expression language for command-line numbers such as
// "(13^12-1)/12" or "2/(13^13+1)": + - * / ^ and parentheses.

#include <string_view>

#include "fracpart/arith.hpp"

namespace fracpart {

// Rational semantics: "/" is exact rational division.
BigRational evaluate_rational(std::string_view text);

// Integer semantics: every "/" must divide exactly, otherwise PreconditionError.
BigInt evaluate_integer(std::string_view text);

}  // namespace fracpart

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "rinehart/poly.hpp"

namespace rinehart {

/// Parses the polynomial grammar
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := ['-'] primary ('^' posint)?
///   primary:= integer ['/' posint] | identifier | '(' expr ')'
///
/// Identifiers are the declared variable names, plus `al` for the adjoined
/// element of a quadratic extension. Throws ParseError with the offset of
/// the offending character.
Poly parse_poly(std::string_view text, const Ring& ring, std::span<const std::string> names);

/// Parses a constant expression (e.g. "3/4", "1+al") into the ground ring.
Scalar parse_scalar(std::string_view text, const Ring& ring);

/// [A-Za-z_][A-Za-z0-9_]*, excluding the reserved name `al`.
bool valid_variable_name(std::string_view name);

}  // namespace rinehart

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "clifan/polyfield.hpp"

namespace clifan {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " at position " + std::to_string(pos + 1)), position(pos) {}
  std::size_t position;  // 0-based offset into the input
};

// Grammar (whitespace-insensitive):
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('+' | '-') factor | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | 'x' integer | 'e[' (integer (',' integer)*)? ']' | '(' expr ')'
// Products keep operand order, so e[1]*e[2] and e[2]*e[1] differ by sign.

PolyField parse_field(std::string_view text, int m);

/// A constant expression; rejects anything mentioning a variable.
Multivector parse_multivector(std::string_view text, int m);

}  // namespace clifan

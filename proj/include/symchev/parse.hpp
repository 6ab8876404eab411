#pragma once

#include <stdexcept>
#include <string>

#include "symchev/poly.hpp"

namespace symchev {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coeff | var | '(' expr ')' | factor '^' nat
//   coeff  := int ('/' posint)?
// Multiplication is always explicit. Unknown identifiers and syntax errors
// throw ParseError with the offending position.
Poly parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace symchev

#pragma once

#include "abelcenter/poly.hpp"

#include <stdexcept>
#include <string>

namespace abelcenter {

/* Error with the 1-based byte position of the offending character. */
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/* Polynomial text grammar: terms `c`, `c x^k`, `x^k` joined by '+'/'-',
 * coefficients as integer or integer/integer, whitespace insignificant.
 * Examples: "4x^3 - 3x", "1/2x^2 - 1/2x", "-7". The UTF-8 minus sign
 * (U+2212) is accepted as '-'. */
Poly parse_poly(const std::string& text);

} // namespace abelcenter

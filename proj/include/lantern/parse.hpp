#pragma once

#include <stdexcept>
#include <string>

#include "lantern/twist.hpp"

namespace lantern {

struct ParseError : std::runtime_error {
    std::size_t column;  // 1-based
    ParseError(std::size_t col, const std::string& message)
        : std::runtime_error("column " + std::to_string(col) + ": " + message),
          column(col) {}
};

// Grammar:
//   word     := twist*
//   twist    := base exponent?
//   base     := "d" INT | "g" INT | "t{" INT ("," INT)* "}"
//   exponent := "^" SIGNED_INT
// "t{i}" normalizes to d i, a canonical prefix set to g j; exponents expand
// into repeated letters with the exponent's sign.
TwistWord parse_twist_word(const std::string& text, int n);

// Grammar text for a word of canonical letters; inverse of parse up to
// exponent expansion.
std::string print_twist_word(const TwistWord& w);

}  // namespace lantern

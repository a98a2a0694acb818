#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "iplogic/formula.hpp"

namespace iplogic {

// Raised on malformed input; line and column are 1-based and point at the
// offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

// Parses the concrete syntax described in formula.hpp.  Whitespace separates
// tokens and is otherwise ignored.  Chained "<->" without parentheses is
// rejected (the connective is non associative).
Formula parse(std::string_view text);

}  // namespace iplogic

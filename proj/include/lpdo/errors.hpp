#pragma once

#include <stdexcept>
#include <string>

namespace lpdo {

/// Violated mathematical precondition: division by zero, order of the zero
/// operator, non-exact division, invalid change of derivations, and so on.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error from the expression parser, with 1-based position info.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace lpdo

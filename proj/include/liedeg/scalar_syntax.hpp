#pragma once

// Textual scalar syntax: integers, fractions p/q, the imaginary unit i and the
// parameter t, combined with + - * / ^ and parentheses, e.g. "3/2 + i",
// "t^-1", "(1+t)/(1-t)". Juxtaposition multiplies ("2 i").

#include "liedeg/scalars.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liedeg {

/// Parse failure with a 1-based source position.
class SyntaxError : public std::runtime_error {
 public:
  enum class Kind {
    Lexical,
    Syntax,
    UnboundSymbol,
    UnknownBasis,
    DuplicateBracket,
    DimensionMismatch,
    NotConstant,
  };

  SyntaxError(const std::string& message, int line, int column, Kind kind = Kind::Syntax);
  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  Kind kind_;
  int line_;
  int column_;
};

using ParameterBindings = std::map<std::string, GaussRat>;

RatFunc parse_ratfunc(std::string_view text, const ParameterBindings* bindings = nullptr);

/// As parse_ratfunc, but rejects values that depend on t.
GaussRat parse_gaussrat(std::string_view text, const ParameterBindings* bindings = nullptr);

}  // namespace liedeg

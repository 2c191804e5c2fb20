#pragma once

// The .lie text format:
//
//   algebra g5 dim 4 with alpha = 1/2
//   [e1,e2] = e2
//   [e1,e3] = e2 + alpha e3
//   [e1,e4] = (alpha + 1) e4
//   [e2,e3] = e4
//
// Only brackets [e_i,e_j] with i < j are written; the rest follows by
// skew-symmetry. '#' starts a comment. Coefficients use the scalar syntax
// and may refer to the parameters bound in the header.

#include "liedeg/lie_core.hpp"
#include "liedeg/scalar_syntax.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace liedeg {

struct BracketEquation {
  size_t i = 0;  // 0-based, i < j
  size_t j = 0;
  Vec<GaussRat> value;
  int line = 0;
  int column = 0;
};

struct AlgebraSource {
  std::string name;
  size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEquation> brackets;
  ParameterBindings bindings;
};

/// Throws SyntaxError (with line, column and kind) on malformed input.
AlgebraSource parse_algebra(std::string_view text);

/// Raised when the elaborated tensor fails the Jacobi identity.
class ElaborationError : public std::runtime_error {
 public:
  ElaborationError(const std::string& message, ValidationReport<GaussRat> report)
      : std::runtime_error(message), report_(std::move(report)) {}
  const ValidationReport<GaussRat>& report() const { return report_; }

 private:
  ValidationReport<GaussRat> report_;
};

Law elaborate(const AlgebraSource& src);

/// parse_algebra followed by elaborate.
Law read_algebra(std::string_view text);

/// Text form accepted by parse_algebra; abelian laws print only the header.
std::string print_algebra(const Law& mu, std::string_view name = "algebra");

}  // namespace liedeg

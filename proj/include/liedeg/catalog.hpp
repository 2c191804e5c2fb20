#pragma once

// Built-in low-dimensional laws: all of L_2 and L_3 over C, the four
// generic laws of the components of L_4, and a few direct sums. Bases follow
// the classical tables (e.g. sl2 as [e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2).

#include "liedeg/lie_core.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liedeg {

struct CatalogEntry {
  std::string alias;         // ASCII name used by the CLI, e.g. "r2+C"
  std::string display_name;  // conventional name, e.g. "r_2 + C"
  size_t dim;                // 0 when the dimension is a parameter
  std::vector<std::string> params;
  std::string brackets;      // human-readable summary
};

const std::vector<CatalogEntry>& catalog_entries();

class UnknownAlgebra : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Throws UnknownAlgebra for an unknown name and std::invalid_argument for
/// the wrong number or kind of parameters.

Law catalog(std::string_view name, const std::vector<GaussRat>& params = {});

/// Resolves "name" or "name(p1, p2, ...)" with parameters in scalar syntax,
/// e.g. "r3_alpha(1/3)", "g4(0, 1)", "abelian(4)".
Law catalog_ref(std::string_view ref);

}  // namespace liedeg

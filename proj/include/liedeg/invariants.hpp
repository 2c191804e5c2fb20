#pragma once

// Linear-algebraic isomorphism invariants of a law: lower central and
// derived series, center, derivations, orbit dimension and
// Chevalley-Eilenberg cohomology with trivial and adjoint coefficients.

#include "liedeg/lie_core.hpp"

#include <string>
#include <vector>

namespace liedeg {

/// Dimensions of a descending series. The list stops at the first repeated
/// value, so the last entry is the stable dimension; at(i) extends it.
struct SeriesDims {
  std::vector<size_t> dims;
  size_t at(size_t i) const { return i < dims.size() ? dims[i] : dims.back(); }
  friend bool operator==(const SeriesDims&, const SeriesDims&) = default;
};

struct Series {
  SeriesDims lower_central;
  SeriesDims derived;
};

Series series_dims(const Law& mu);

size_t center_dim(const Law& mu);

/// Basis of Der(mu) as n x n matrices (D e_j = sum_k D(k,j) e_k).
std::vector<Matrix<GaussRat>> derivations(const Law& mu);
size_t der_dim(const Law& mu);

enum class Coefficients { Trivial, Adjoint };

/// Cochains C^p are alternating p-forms with values in k (trivial) or the
/// algebra (adjoint). Coordinates: subsets of size p in lexicographic order,
/// major; output component minor.
size_t cochain_dim(size_t n, size_t p, Coefficients coeffs);

/// Matrix of d^p : C^p -> C^{p+1} with
/// (df)(x_0..x_p) = sum_{a<b} (-1)^{a+b} f([x_a,x_b], x_0..^a..^b..x_p)
///                + sum_a (-1)^a rho(x_a) f(x_0..^a..x_p).
Matrix<GaussRat> coboundary_matrix(const Law& mu, size_t p, Coefficients coeffs);

/// dim H^p for p = 0..n.
std::vector<size_t> cohomology_dims(const Law& mu, Coefficients coeffs);

/// Lexicographically ordered p-subsets of {0..n-1}.
std::vector<std::vector<size_t>> subsets(size_t n, size_t p);

struct InvariantProfile {
  size_t dim = 0;
  SeriesDims lower_central;
  SeriesDims derived;
  size_t center_dim = 0;
  size_t der_dim = 0;
  size_t orbit_dim = 0;
  std::vector<size_t> betti_trivial;
  std::vector<size_t> betti_adjoint;
  bool nilpotent = false;
  bool solvable = false;
  bool abelian = false;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile profile(const Law& mu);

}  // namespace liedeg

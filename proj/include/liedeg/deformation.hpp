#pragma once

// Truncated formal deformations [x,y]_t = phi_0(x,y) + sum_k phi_k(x,y) t^k:
// 2-cocycle test for the infinitesimal part, order-by-order Jacobi defects,
// and cohomological rigidity certificates.

#include "liedeg/lie_core.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace liedeg {

struct TruncatedDeformation {
  Law base;                // phi_0
  std::vector<Law> terms;  // phi_1 .. phi_N
  size_t order() const { return terms.size(); }
};

/// Alternating trilinear map with values in the algebra, stored on the
/// triples i<j<k in lexicographic order.
struct DefectTensor {
  size_t n = 0;
  std::vector<std::array<size_t, 3>> triples;
  std::vector<Vec<GaussRat>> values;

  bool is_zero() const;
  /// First non-zero component as (i, j, k, s), 0-based.
  std::optional<std::array<size_t, 4>> first_nonzero() const;
};

struct CocycleCheck {
  bool is_cocycle = false;
  DefectTensor coboundary;  // d phi evaluated on every basis triple
};

/// Evaluates
///   (d phi)(x,y,z) = -phi([x,y],z) + phi([x,z],y) - phi([y,z],x)
///                    + [x,phi(y,z)] - [y,phi(x,z)] + [z,phi(x,y)]
/// on all basis triples. Throws std::invalid_argument when phi is not
/// antisymmetric or dimensions differ.
CocycleCheck is_two_cocycle(const Law& mu, const Law& phi);

/// Order-k defect, k = 1..N:
///   sum_{a+b=k} phi_a(phi_b(x,y),z) + phi_a(phi_b(y,z),x) + phi_a(phi_b(z,x),y).
/// All zero iff [,]_t satisfies Jacobi modulo t^{N+1} (given phi_0 is Lie).
std::vector<DefectTensor> jacobi_defect(const TruncatedDeformation& d);

/// Throws std::invalid_argument when the base is not a Lie law, a term is not
/// antisymmetric, or dimensions differ.
void check_deformation(const TruncatedDeformation& d);

enum class RigidityVerdict { FormallyRigidByH2, UnobstructedByH3, Unknown };

std::string to_string(RigidityVerdict v);

struct RigidityCertificate {
  RigidityVerdict verdict = RigidityVerdict::Unknown;
  size_t h2 = 0;  // dim H^2(mu, mu)
  size_t h3 = 0;  // dim H^3(mu, mu)
};

/// H^2(mu,mu) = 0 certifies rigidity. Otherwise UnobstructedByH3 is reported
/// when H^3(mu,mu) = 0 and the 3-cochain space is non-zero (n >= 3), and
/// Unknown in every other case. Non-rigidity is never inferred.
RigidityCertificate rigidity(const Law& mu);

}  // namespace liedeg

#pragma once

// Contractions over k(t): transport of a law by a witness curve g_t in
// GL_n(k(t)), the t -> 0 limit, Inonu-Wigner contractions, the End(V_A)
// formulation with its short exact sequence, and the formal deformation a
// contraction induces.

#include "liedeg/deformation.hpp"
#include "liedeg/lie_core.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace liedeg {

using Witness = BasisChange<RatFunc>;

enum class Convention { Action, NewBasis };

/// Builds a witness from a matrix in either convention.
Witness make_witness(const Matrix<RatFunc>& m, Convention convention);

/// g_t = t^-1 I_n, the universal contraction to the abelian law.
Witness scaling_witness(size_t n);

struct ContractionResult {
  LawT transported;
  std::optional<Law> limit;
  /// Minimum valuation over all entries (0 when every entry is zero).
  int min_valuation = 0;
  /// First entry (0-based i,j,r) attaining a negative valuation, if any.
  std::optional<std::array<size_t, 3>> offending;
};

LawT transport(const Law& mu, const Witness& g);

/// Entrywise t -> 0 limit; present iff every valuation is >= 0.
ContractionResult limit(LawT transported);

ContractionResult contract(const Law& mu, const Witness& g);

struct IwContraction {
  Witness witness;
  ContractionResult result;
  std::vector<Vec<GaussRat>> subalgebra;  // echelon basis of u
  std::vector<Vec<GaussRat>> complement;  // coordinate complement v
  Matrix<GaussRat> projection;            // P onto u along v
};

/// g = P + t^-1 (I - P) for the projection P onto the subalgebra spanned by
/// subspace_basis along its coordinate complement. Throws
/// std::invalid_argument when the vectors are dependent or do not span a
/// subalgebra.
IwContraction iw_contract(const Law& mu, const std::vector<Vec<GaussRat>>& subspace_basis);

/// True when span(basis) is closed under the bracket.
bool is_subalgebra(const Law& mu, const std::vector<Vec<GaussRat>>& basis);
/// True when [mu, span(basis)] lies in span(basis).
bool is_ideal(const Law& mu, const std::vector<Vec<GaussRat>>& basis);
/// Nilpotency of span(basis) as a subalgebra (basis must span a subalgebra).
bool is_nilpotent_subalgebra(const Law& mu, const std::vector<Vec<GaussRat>>& basis);

struct EndoContractionReport {
  bool in_lattice = false;        // all valuations of the contracted law >= 0
  ContractionResult result;
  Matrix<GaussRat> phi0;          // phi mod t
  std::vector<Vec<GaussRat>> image;   // u = phi0(V)
  std::vector<Vec<GaussRat>> kernel;  // v = ker phi0
  bool image_is_subalgebra = false;
  bool kernel_is_ideal = false;
  bool kernel_is_nilpotent = false;
  /// phi0(mu0(x,y)) = mu(phi0 x, phi0 y) on all basis pairs.
  bool phi0_is_homomorphism = false;

  bool exact_sequence_verified() const {
    return in_lattice && image_is_subalgebra && kernel_is_ideal && phi0_is_homomorphism &&
           image.size() + kernel.size() == phi0.rows();
  }
};

/// phi in End(V_A) (entries are polynomials in t) with det phi != 0. The
/// contracted law is mu_phi(x,y) = phi^-1 mu(phi x, phi y), i.e. phi is the
/// new-basis matrix of the curve. Throws std::invalid_argument when phi is
/// singular or has negative powers of t.
EndoContractionReport check_endo_contraction(const Law& mu, const Matrix<LaurentPoly>& phi);

/// Taylor coefficients of transport(mu, g) up to t^order. Throws
/// std::domain_error when the limit does not exist.
TruncatedDeformation induced_deformation(const Law& mu, const Witness& g, size_t order);

}  // namespace liedeg

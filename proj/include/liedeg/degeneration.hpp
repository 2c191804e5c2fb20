#pragma once

// Degenerations between laws: the invariant obstruction battery (necessary
// conditions), witness verification (sufficient condition), and Hasse
// diagrams of witnessed degenerations with their transitive closure.

#include "liedeg/contraction.hpp"
#include "liedeg/invariants.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace liedeg {

enum class VerdictStatus { Obstructed, Consistent, Verified };

std::string to_string(VerdictStatus s);

struct DegenerationVerdict {
  VerdictStatus status = VerdictStatus::Consistent;
  /// Obstructed: the violated inequality, its series/cohomology index (if
  /// any) and the values for the source and the target.
  std::string inequality;
  std::optional<size_t> index;
  size_t source_value = 0;
  size_t target_value = 0;
  std::string note;
  /// Verified: the witness and the optional constant change applied after
  /// the limit (action convention).
  std::optional<Witness> witness;
  std::optional<Matrix<GaussRat>> post_change;
};

/// Runs every implemented inequality for a non-trivial degeneration
/// source -> target. Identical profiles give Consistent with a note.
/// Throws std::invalid_argument on a dimension mismatch.
DegenerationVerdict obstruct(const InvariantProfile& source, const InvariantProfile& target);
DegenerationVerdict obstruct(const Law& source, const Law& target);

class VerificationError : public std::runtime_error {
 public:
  enum class Kind { DimensionMismatch, NoLimit, LimitMismatch };
  VerificationError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Verified iff lim transport(source, witness) exists and, after applying
/// post_change (action convention), equals target entrywise. Throws
/// VerificationError otherwise.
DegenerationVerdict verify(const Law& source, const Law& target, const Witness& witness,
                           const std::optional<Matrix<GaussRat>>& post_change = std::nullopt);

struct HasseNode {
  std::string name;
  std::string family;  // non-empty for sampled members of a parametrized family
  Law law;
};

struct WitnessedEdge {
  std::string from;
  std::string to;
  Witness witness;
  std::optional<Matrix<GaussRat>> post_change;
};

class HasseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HasseDiagram {
  std::vector<HasseNode> nodes;
  std::vector<InvariantProfile> profiles;
  std::vector<WitnessedEdge> edges;                    // verified, in input order
  std::vector<std::pair<size_t, size_t>> edge_index;  // (from, to) node indices
  std::vector<std::vector<bool>> reach;               // reflexive-transitive closure

  size_t index_of(const std::string& name) const;
  /// Names reachable from name, including itself.
  std::set<std::string> closure(const std::string& name) const;
};

/// Verifies every edge, certifies that orbit_dim strictly drops along each
/// one, computes the transitive closure and checks that no closure pair is
/// Obstructed. Throws HasseError on any failure.
HasseDiagram build_hasse(std::vector<HasseNode> nodes, std::vector<WitnessedEdge> edges);

/// Deterministic DOT digraph of the verified edges; nodes in input order.
std::string to_dot(const HasseDiagram& diagram);

struct HasseDataset {
  std::vector<HasseNode> nodes;
  std::vector<WitnessedEdge> edges;
};

/// r2 -> C^2.
HasseDataset l2_dataset();

/// The essential degenerations of L_3(C) with stored witnesses. The family
/// r_{3,alpha} (alpha^2 != 1) is represented by the sampled alpha values.
HasseDataset l3_dataset(const std::vector<GaussRat>& alpha_samples);
std::vector<GaussRat> default_alpha_samples();

/// Node name of a sampled r_{3,alpha}, e.g. "r3_alpha(1/3)".
std::string r3_alpha_name(const GaussRat& alpha);

}  // namespace liedeg

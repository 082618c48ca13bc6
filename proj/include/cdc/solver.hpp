#pragma once

// Consistency checking for basic networks (connected and possibly
// disconnected regions), maximal canonical solutions, the simple-region
// transform and backtracking over disjunctive networks.

#include <optional>
#include <string>
#include <vector>

#include "cdc/direction_matrix.hpp"
#include "cdc/pixel_grid.hpp"

namespace cdc {

enum class StageTag { ProjectiveX, ProjectiveY, ComponentMissing, VerificationFailed };

/// Where the pipeline rejected a network. i and j are 0-based variable
/// indices (-1 when the stage has no pair witness); phi is the violated tile
/// for VerificationFailed.
struct Stage {
  StageTag tag = StageTag::ProjectiveX;
  int i = -1;
  int j = -1;
  int phi = 0;

  /// Human-readable, with 1-based variable indices.
  std::string to_string() const;

  friend bool operator==(const Stage&, const Stage&) = default;
};

struct SolveOutcome {
  bool consistent = false;
  std::optional<Stage> failure;
  Frame frame;
  std::vector<IntRect> mbrs;
  /// The maximal canonical solution; present iff consistent.
  std::vector<PixelRegion> solution;
};

/// Runs the five-step pipeline. CdcS is decided exactly as Cdc. Throws
/// std::invalid_argument if the network is incomplete or holds a matrix that
/// is invalid for the model.
SolveOutcome solve_basic(const CdcBasicNetwork& net, Model model);

/// Pixels of m_i ruled out by some zero entry d_ij^phi, computed through the
/// difference/cumulative grids.
PixelRegion disallowed_pixels(int i, const CdcBasicNetwork& net, const std::vector<IntRect>& mbrs,
                              const Frame& frame);

/// Full re-check: every region nonempty (and 4-connected unless CdcD) and
/// dir(regions[i], mbr(regions[j])) equal to the network's matrix for every
/// ordered pair.
bool verify_solution(const std::vector<PixelRegion>& regions, const CdcBasicNetwork& net,
                     Model model);

/// Turns the maximal canonical solution of a connected network into simple
/// regions on a frame refined 5x, with every pairwise direction matrix
/// unchanged. Throws std::invalid_argument if the outcome is not consistent
/// or some region has a contact point that does not border exactly one hole.
std::vector<PixelRegion> simplify_solution(const SolveOutcome& outcome);

/// Refinement factor used by simplify_solution.
inline constexpr int kSubdivision = 5;

struct DisjunctiveOutcome {
  bool satisfiable = false;
  /// The basic network the search settled on; present iff satisfiable.
  std::optional<CdcBasicNetwork> refinement;
  SolveOutcome outcome;
  /// Number of complete refinements handed to solve_basic.
  long long leaves = 0;
};

/// Chronological backtracking over the candidate matrices of each unordered
/// pair, pruning on empty projective relations. Throws std::invalid_argument
/// if some candidate set is empty or holds a matrix invalid for the model.
DisjunctiveOutcome solve_disjunctive(const CdcDisjunctiveNetwork& net, Model model);

}  // namespace cdc

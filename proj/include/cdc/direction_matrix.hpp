#pragma once

// Direction relation matrices, their validity per calculus, projections onto
// the axes and the projective interval networks of a basic network.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/interval_algebra.hpp"
#include "cdc/pixel_grid.hpp"

namespace cdc {

/// Which calculus a network is read in: connected regions, possibly
/// disconnected regions, or simple regions. Simple regions share the
/// connected calculus's relation set.
enum class Model { Cdc, CdcD, CdcS };

std::string_view model_name(Model m);
std::optional<Model> model_from_name(std::string_view name);

/// 3x3 Boolean matrix. Row 1 is the north row (NW N NE), column 1 the west
/// column. Tile phi = 3(row-1) + col is stored in bit phi-1.
class DirectionMatrix {
 public:
  constexpr DirectionMatrix() = default;
  static constexpr DirectionMatrix from_bits(std::uint16_t bits) {
    DirectionMatrix m;
    m.bits_ = bits & 0x1ff;
    return m;
  }
  static constexpr DirectionMatrix center_only() { return from_bits(1u << 4); }
  static constexpr DirectionMatrix single_tile(int phi) {
    return from_bits(static_cast<std::uint16_t>(1u << (phi - 1)));
  }

  /// Parses nine '0'/'1' characters in row-major order from the north-west
  /// tile; '/' separators are skipped. Throws std::invalid_argument.
  static DirectionMatrix parse(std::string_view text);

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool tile(int phi) const { return (bits_ >> (phi - 1)) & 1u; }
  constexpr bool at(int row, int col) const { return tile(3 * (row - 1) + col); }
  constexpr bool is_zero() const { return bits_ == 0; }
  int tile_count() const;
  constexpr bool subset_of(DirectionMatrix o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr DirectionMatrix operator|(DirectionMatrix o) const { return from_bits(bits_ | o.bits_); }

  /// "011/001/000" style, or the nine characters without separators.
  std::string to_string(bool slashes = true) const;

  friend constexpr bool operator==(DirectionMatrix, DirectionMatrix) = default;
  friend constexpr auto operator<=>(DirectionMatrix a, DirectionMatrix b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint16_t bits_ = 0;
};

/// Nonzero and 4-connected for Cdc / CdcS; nonzero for CdcD.
bool is_valid_matrix(DirectionMatrix m, Model model);

/// Every valid matrix of the model in ascending bit order.
std::vector<DirectionMatrix> enumerate_basic(Model model);

/// Column ORs, west column first. The vector describes the bounding
/// interval, so a matrix with both outer columns set (possible only for
/// disconnected regions) also gets the middle slot.
DirectionVector x_projection(DirectionMatrix m);

/// Row ORs with the south row in slot 1 and the north row in slot 3, filled
/// in the same way.
DirectionVector y_projection(DirectionMatrix m);

enum class Axis { X, Y };

/// Relation between the projections of v_i and v_j on one axis given
/// delta_ij and delta_ji. Empty, a basic relation, or {p,m} / {pi,mi}.
IaRelationSet projective_pair_relation(DirectionMatrix delta_ij, DirectionMatrix delta_ji,
                                       Axis axis);

/// Basic network: one matrix per ordered pair i != j. The diagonal is
/// implicitly the center-only matrix. Unset pairs hold the zero matrix.
class CdcBasicNetwork {
 public:
  explicit CdcBasicNetwork(int n);

  int size() const { return n_; }
  void set(int i, int j, DirectionMatrix m);
  DirectionMatrix get(int i, int j) const {
    return i == j ? DirectionMatrix::center_only() : rel_[static_cast<std::size_t>(i) * n_ + j];
  }
  bool complete() const;
  /// Complete and every off-diagonal matrix valid for the model.
  bool valid_for(Model model) const;

  friend bool operator==(const CdcBasicNetwork&, const CdcBasicNetwork&) = default;

 private:
  int n_;
  std::vector<DirectionMatrix> rel_;
};

/// Candidate matrices per ordered pair. Unset pairs have no candidates.
class CdcDisjunctiveNetwork {
 public:
  explicit CdcDisjunctiveNetwork(int n);

  int size() const { return n_; }
  /// Stores the candidates sorted ascending and de-duplicated.
  void set(int i, int j, std::vector<DirectionMatrix> candidates);
  const std::vector<DirectionMatrix>& get(int i, int j) const {
    return rel_[static_cast<std::size_t>(i) * n_ + j];
  }
  bool all_singletons() const;
  /// Every off-diagonal candidate set nonempty and valid for the model.
  bool valid_for(Model model) const;

  friend bool operator==(const CdcDisjunctiveNetwork&, const CdcDisjunctiveNetwork&) = default;

 private:
  int n_;
  std::vector<std::vector<DirectionMatrix>> rel_;
};

struct ProjectiveFailure {
  Axis axis;
  int i;
  int j;
};

struct ProjectiveNetworks {
  IaBasicNetwork x;
  IaBasicNetwork y;
};

/// Per-axis meet-free projective interval networks, or the first pair (in
/// lexicographic order, x before y) whose refined relation is empty.
struct ProjectiveResult {
  std::optional<ProjectiveNetworks> networks;
  std::optional<ProjectiveFailure> failure;
};

ProjectiveResult projective_networks(const CdcBasicNetwork& net);

/// Direction matrix of a digital region to any region with mbr mbr_b, read at
/// pixel granularity. mbr_b must lie inside a's frame.
DirectionMatrix dir_of_digital(const PixelRegion& a, const IntRect& mbr_b);

}  // namespace cdc

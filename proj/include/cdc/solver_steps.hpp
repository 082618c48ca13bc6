#pragma once

// The individual pipeline steps behind solve_basic, exposed so that tests can
// check each against an independent oracle.

#include <optional>
#include <vector>

#include "cdc/direction_matrix.hpp"
#include "cdc/interval_algebra.hpp"
#include "cdc/pixel_grid.hpp"
#include "cdc/solver.hpp"

namespace cdc::steps {

struct CanonicalLayout {
  Frame frame;
  std::vector<IntInterval> x;
  std::vector<IntInterval> y;
  std::vector<IntRect> mbrs;
};

struct LayoutResult {
  std::optional<CanonicalLayout> layout;
  std::optional<Stage> failure;
};

/// Steps 1 and 2: projective networks and their canonical interval solutions.
LayoutResult canonical_layout(const CdcBasicNetwork& net);

/// Q_i: how many zero-entry tiles m_j^phi (j != i) cover each pixel, built by
/// summing the sparse difference grids of the tiles and accumulating once.
IntGrid disallowed_count(int i, const CdcBasicNetwork& net, const std::vector<IntRect>& mbrs,
                         const Frame& frame);

/// b_i: pixels of m_i not disallowed.
PixelRegion allowed_region(int i, const CdcBasicNetwork& net, const std::vector<IntRect>& mbrs,
                           const Frame& frame);

/// The 4-connected component of b whose mbr is m, if any.
std::optional<PixelRegion> component_with_mbr(const PixelRegion& b, const IntRect& m);

struct Candidates {
  std::vector<PixelRegion> regions;
  std::optional<Stage> failure;
};

/// Steps 3 and 4. For Cdc/CdcS each candidate is the component of b_i with
/// mbr m_i; for CdcD it is b_i itself, which must have mbr m_i.
Candidates build_candidates(const CdcBasicNetwork& net, const CanonicalLayout& layout, Model model);

/// Step 5 for connected candidates: each required tile is probed only on the
/// boundary pixels of m_i intersected with the tile.
std::optional<Stage> verify_boundary(const std::vector<PixelRegion>& c, const CdcBasicNetwork& net,
                                     const std::vector<IntRect>& mbrs, const Frame& frame);

/// Step 5 for possibly disconnected candidates, via prefix counts.
std::optional<Stage> verify_prefix(const std::vector<PixelRegion>& b, const CdcBasicNetwork& net,
                                   const std::vector<IntRect>& mbrs, const Frame& frame);

}  // namespace cdc::steps

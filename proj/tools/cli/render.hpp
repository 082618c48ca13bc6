#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdc/pixel_grid.hpp"

namespace cdc::cli {

/// One character per pixel, top row first: the owning region's letter (A, B,
/// ... then a, b, ...), '#' where regions overlap and '.' where none is.
std::string render_ascii(const std::vector<PixelRegion>& regions);

/// Plain PBM (P1), nx columns by ny rows, top row = highest l.
std::string to_pbm(const PixelRegion& region);

/// Inverse of to_pbm. Throws std::invalid_argument.
PixelRegion parse_pbm(std::string_view text);

}  // namespace cdc::cli

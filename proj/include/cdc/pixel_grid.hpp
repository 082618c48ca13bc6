#pragma once

// Digital plane: pixel regions over a frame [0,nx] x [0,ny], integer grids,
// tile rectangles, difference/cumulative grids, prefix counts, components,
// holes and contact points.
//
// Pixel p(k,l) is the unit square [k,k+1] x [l,l+1]; k runs along x and l
// along y with the origin at the lower-left corner.

#include <cstdint>
#include <string>
#include <vector>

namespace cdc {

/// Axis-aligned integer rectangle [x_lo,x_hi] x [y_lo,y_hi]. Pixel-empty when
/// either side has zero length.
struct IntRect {
  int x_lo = 0;
  int x_hi = 0;
  int y_lo = 0;
  int y_hi = 0;

  bool pixel_empty() const { return x_lo >= x_hi || y_lo >= y_hi; }
  int width() const { return x_hi - x_lo; }
  int height() const { return y_hi - y_lo; }
  bool contains_pixel(int k, int l) const {
    return k >= x_lo && k < x_hi && l >= y_lo && l < y_hi;
  }
  std::string to_string() const;

  friend bool operator==(const IntRect&, const IntRect&) = default;
};

/// Intersection of two rectangles; degenerate results are clamped so that
/// lo <= hi on both axes.
IntRect intersect(const IntRect& a, const IntRect& b);

struct Frame {
  int nx = 0;
  int ny = 0;

  IntRect rect() const { return {0, nx, 0, ny}; }
  int pixels() const { return nx * ny; }

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Integer matrix N[k,l] over a frame's pixels.
class IntGrid {
 public:
  IntGrid() = default;
  explicit IntGrid(Frame frame, int fill = 0);

  const Frame& frame() const { return frame_; }
  int at(int k, int l) const { return vals_[index(k, l)]; }
  int& at(int k, int l) { return vals_[index(k, l)]; }
  int count_nonzero() const;

  IntGrid& operator+=(const IntGrid& o);
  friend IntGrid operator+(IntGrid a, const IntGrid& b) { return a += b; }
  friend bool operator==(const IntGrid&, const IntGrid&) = default;

  /// Rows printed top (highest l) to bottom, entries separated by spaces.
  std::string to_string() const;

 private:
  std::size_t index(int k, int l) const {
    return static_cast<std::size_t>(k) * frame_.ny + l;
  }
  Frame frame_;
  std::vector<int> vals_;
};

/// Boolean occupancy grid; a set of closed pixels of the frame.
class PixelRegion {
 public:
  PixelRegion() = default;
  explicit PixelRegion(Frame frame);

  const Frame& frame() const { return frame_; }
  /// Out-of-frame pixels read as unoccupied.
  bool contains(int k, int l) const {
    return k >= 0 && l >= 0 && k < frame_.nx && l < frame_.ny && occ_[index(k, l)] != 0;
  }
  void set(int k, int l, bool on = true);
  int count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const PixelRegion& o) const;

  /// 0/1 grid of the region.
  IntGrid to_grid() const;

  friend bool operator==(const PixelRegion&, const PixelRegion&) = default;

  /// '#' for occupied pixels and '.' otherwise, top row first.
  std::string to_string() const;

 private:
  std::size_t index(int k, int l) const {
    return static_cast<std::size_t>(k) * frame_.ny + l;
  }
  Frame frame_;
  std::vector<std::uint8_t> occ_;
};

/// First-index differences: N[k,l] - N[k-1,l], with N[0,l] kept.
IntGrid diff_grid(const IntGrid& n);

/// Running sums along the first index; inverse of diff_grid.
IntGrid acc_grid(const IntGrid& n);

/// Tile phi (1..9, row-major from NW) of mbr, clipped to the frame. Tile 5 is
/// mbr itself. The result may be pixel-empty.
IntRect tile_rect(const IntRect& mbr, int phi, const Frame& frame);

PixelRegion rasterize_rect(const IntRect& r, const Frame& frame);

/// Maximal 4-connected groups, ordered by their lexicographically smallest
/// (k,l) pixel.
std::vector<PixelRegion> connected_components(const PixelRegion& a);

bool is_4_connected(const PixelRegion& a);

/// Tightest rectangle containing every occupied pixel. Throws
/// std::invalid_argument on an empty region.
IntRect mbr_of(const PixelRegion& a);

/// Inclusive 2-D prefix counts: entry [k,l] is the number of occupied pixels
/// inside [0,k+1] x [0,l+1].
IntGrid count_prefix(const PixelRegion& a);

/// True iff the region counted by prefix has a pixel inside r. Constant time.
bool rect_has_pixel(const IntGrid& prefix, const IntRect& r);

/// Bounded 4-connected components of the complement of a.
std::vector<PixelRegion> holes_of(const PixelRegion& a);

/// Classification of a contact point by which of its two non-member pixels
/// lies in a hole. The four letters name the pixels around the point
/// clockwise from the top-left one: h = hole, a = region, x = neither.
enum class ContactType { Haxa, Ahax, Xaha, Axah, Separating, DoubleHole };

struct ContactPoint {
  int k = 0;
  int l = 0;
  ContactType type = ContactType::Separating;

  friend bool operator==(const ContactPoint&, const ContactPoint&) = default;
};

/// Integer points where exactly two diagonally opposite incident pixels
/// belong to a, in (k,l) lexicographic order.
std::vector<ContactPoint> contact_points(const PixelRegion& a);

std::string contact_type_name(ContactType t);

}  // namespace cdc

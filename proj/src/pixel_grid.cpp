#include "cdc/pixel_grid.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace cdc {

namespace {

constexpr std::array<std::pair<int, int>, 4> kNeighbours = {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

// Labels 4-connected groups of pixels for which `member(k,l)` holds. Labels
// are assigned in (k,l) scan order; -1 marks non-members.
template <typename Pred>
std::vector<int> label_groups(const Frame& f, Pred member, int& groups) {
  std::vector<int> label(static_cast<std::size_t>(f.pixels()), -1);
  auto idx = [&](int k, int l) { return static_cast<std::size_t>(k) * f.ny + l; };
  std::vector<std::pair<int, int>> queue;
  groups = 0;
  for (int k = 0; k < f.nx; ++k) {
    for (int l = 0; l < f.ny; ++l) {
      if (label[idx(k, l)] >= 0 || !member(k, l)) continue;
      const int id = groups++;
      label[idx(k, l)] = id;
      queue.assign(1, {k, l});
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [ck, cl] = queue[head];
        for (auto [dk, dl] : kNeighbours) {
          const int nk = ck + dk;
          const int nl = cl + dl;
          if (nk < 0 || nl < 0 || nk >= f.nx || nl >= f.ny) continue;
          if (label[idx(nk, nl)] >= 0 || !member(nk, nl)) continue;
          label[idx(nk, nl)] = id;
          queue.emplace_back(nk, nl);
        }
      }
    }
  }
  return label;
}

std::vector<PixelRegion> split_labels(const Frame& f, const std::vector<int>& label, int groups) {
  std::vector<PixelRegion> out(groups, PixelRegion(f));
  for (int k = 0; k < f.nx; ++k)
    for (int l = 0; l < f.ny; ++l)
      if (const int id = label[static_cast<std::size_t>(k) * f.ny + l]; id >= 0)
        out[id].set(k, l);
  return out;
}

// Hole label per pixel (-1 outside every hole) and the hole count.
std::vector<int> hole_labels(const PixelRegion& a, int& hole_count) {
  const Frame& f = a.frame();
  int groups = 0;
  auto label = label_groups(f, [&](int k, int l) { return !a.contains(k, l); }, groups);
  std::vector<char> touches_outside(groups, 0);
  for (int k = 0; k < f.nx; ++k) {
    for (int l = 0; l < f.ny; ++l) {
      if (k != 0 && l != 0 && k != f.nx - 1 && l != f.ny - 1) continue;
      if (const int id = label[static_cast<std::size_t>(k) * f.ny + l]; id >= 0)
        touches_outside[id] = 1;
    }
  }
  std::vector<int> remap(groups, -1);
  hole_count = 0;
  for (int g = 0; g < groups; ++g)
    if (!touches_outside[g]) remap[g] = hole_count++;
  for (int& v : label)
    if (v >= 0) v = remap[v];
  return label;
}

}  // namespace

std::string IntRect::to_string() const {
  std::ostringstream os;
  os << '[' << x_lo << ',' << x_hi << "]x[" << y_lo << ',' << y_hi << ']';
  return os.str();
}

IntRect intersect(const IntRect& a, const IntRect& b) {
  IntRect r{std::max(a.x_lo, b.x_lo), std::min(a.x_hi, b.x_hi), std::max(a.y_lo, b.y_lo),
            std::min(a.y_hi, b.y_hi)};
  r.x_hi = std::max(r.x_hi, r.x_lo);
  r.y_hi = std::max(r.y_hi, r.y_lo);
  return r;
}

IntGrid::IntGrid(Frame frame, int fill)
    : frame_(frame), vals_(static_cast<std::size_t>(frame.pixels()), fill) {}

int IntGrid::count_nonzero() const {
  return static_cast<int>(std::count_if(vals_.begin(), vals_.end(), [](int v) { return v != 0; }));
}

IntGrid& IntGrid::operator+=(const IntGrid& o) {
  if (!(frame_ == o.frame_)) throw std::invalid_argument("IntGrid frame mismatch");
  for (std::size_t i = 0; i < vals_.size(); ++i) vals_[i] += o.vals_[i];
  return *this;
}

std::string IntGrid::to_string() const {
  std::ostringstream os;
  for (int l = frame_.ny - 1; l >= 0; --l) {
    for (int k = 0; k < frame_.nx; ++k) os << (k ? " " : "") << at(k, l);
    os << '\n';
  }
  return os.str();
}

PixelRegion::PixelRegion(Frame frame)
    : frame_(frame), occ_(static_cast<std::size_t>(frame.pixels()), 0) {}

void PixelRegion::set(int k, int l, bool on) {
  if (k < 0 || l < 0 || k >= frame_.nx || l >= frame_.ny)
    throw std::out_of_range("pixel outside frame");
  occ_[index(k, l)] = on ? 1 : 0;
}

int PixelRegion::count() const {
  return static_cast<int>(std::count(occ_.begin(), occ_.end(), std::uint8_t{1}));
}

bool PixelRegion::subset_of(const PixelRegion& o) const {
  for (int k = 0; k < frame_.nx; ++k)
    for (int l = 0; l < frame_.ny; ++l)
      if (contains(k, l) && !o.contains(k, l)) return false;
  return true;
}

IntGrid PixelRegion::to_grid() const {
  IntGrid g(frame_);
  for (int k = 0; k < frame_.nx; ++k)
    for (int l = 0; l < frame_.ny; ++l) g.at(k, l) = contains(k, l) ? 1 : 0;
  return g;
}

std::string PixelRegion::to_string() const {
  std::string out;
  for (int l = frame_.ny - 1; l >= 0; --l) {
    for (int k = 0; k < frame_.nx; ++k) out += contains(k, l) ? '#' : '.';
    out += '\n';
  }
  return out;
}

IntGrid diff_grid(const IntGrid& n) {
  const Frame& f = n.frame();
  IntGrid out(f);
  for (int l = 0; l < f.ny; ++l) {
    if (f.nx > 0) out.at(0, l) = n.at(0, l);
    for (int k = 1; k < f.nx; ++k) out.at(k, l) = n.at(k, l) - n.at(k - 1, l);
  }
  return out;
}

IntGrid acc_grid(const IntGrid& n) {
  const Frame& f = n.frame();
  IntGrid out = n;
  for (int k = 1; k < f.nx; ++k)
    for (int l = 0; l < f.ny; ++l) out.at(k, l) += out.at(k - 1, l);
  return out;
}

IntRect tile_rect(const IntRect& mbr, int phi, const Frame& frame) {
  if (phi < 1 || phi > 9) throw std::out_of_range("tile index must be in 1..9");
  const int row = (phi - 1) / 3;  // 0 = north
  const int col = (phi - 1) % 3;  // 0 = west
  IntRect r;
  switch (col) {
    case 0: r.x_lo = 0; r.x_hi = mbr.x_lo; break;
    case 1: r.x_lo = mbr.x_lo; r.x_hi = mbr.x_hi; break;
    default: r.x_lo = mbr.x_hi; r.x_hi = frame.nx; break;
  }
  switch (row) {
    case 0: r.y_lo = mbr.y_hi; r.y_hi = frame.ny; break;
    case 1: r.y_lo = mbr.y_lo; r.y_hi = mbr.y_hi; break;
    default: r.y_lo = 0; r.y_hi = mbr.y_lo; break;
  }
  return intersect(r, frame.rect());
}

PixelRegion rasterize_rect(const IntRect& r, const Frame& frame) {
  PixelRegion out(frame);
  const IntRect c = intersect(r, frame.rect());
  for (int k = c.x_lo; k < c.x_hi; ++k)
    for (int l = c.y_lo; l < c.y_hi; ++l) out.set(k, l);
  return out;
}

std::vector<PixelRegion> connected_components(const PixelRegion& a) {
  int groups = 0;
  const auto label = label_groups(a.frame(), [&](int k, int l) { return a.contains(k, l); }, groups);
  return split_labels(a.frame(), label, groups);
}

bool is_4_connected(const PixelRegion& a) {
  int groups = 0;
  label_groups(a.frame(), [&](int k, int l) { return a.contains(k, l); }, groups);
  return groups == 1;
}

IntRect mbr_of(const PixelRegion& a) {
  const Frame& f = a.frame();
  IntRect r{f.nx, 0, f.ny, 0};
  bool any = false;
  for (int k = 0; k < f.nx; ++k) {
    for (int l = 0; l < f.ny; ++l) {
      if (!a.contains(k, l)) continue;
      any = true;
      r.x_lo = std::min(r.x_lo, k);
      r.x_hi = std::max(r.x_hi, k + 1);
      r.y_lo = std::min(r.y_lo, l);
      r.y_hi = std::max(r.y_hi, l + 1);
    }
  }
  if (!any) throw std::invalid_argument("mbr of an empty region");
  return r;
}

IntGrid count_prefix(const PixelRegion& a) {
  const Frame& f = a.frame();
  IntGrid m = a.to_grid();
  for (int k = 1; k < f.nx; ++k)
    for (int l = 0; l < f.ny; ++l) m.at(k, l) += m.at(k - 1, l);
  for (int k = 0; k < f.nx; ++k)
    for (int l = 1; l < f.ny; ++l) m.at(k, l) += m.at(k, l - 1);
  return m;
}

bool rect_has_pixel(const IntGrid& prefix, const IntRect& r) {
  if (r.pixel_empty()) return false;
  auto m = [&](int k, int l) { return (k < 0 || l < 0) ? 0 : prefix.at(k, l); };
  return m(r.x_lo - 1, r.y_lo - 1) + m(r.x_hi - 1, r.y_hi - 1) >
         m(r.x_hi - 1, r.y_lo - 1) + m(r.x_lo - 1, r.y_hi - 1);
}

std::vector<PixelRegion> holes_of(const PixelRegion& a) {
  int count = 0;
  const auto label = hole_labels(a, count);
  return split_labels(a.frame(), label, count);
}

std::vector<ContactPoint> contact_points(const PixelRegion& a) {
  const Frame& f = a.frame();
  int hole_count = 0;
  const auto hole = hole_labels(a, hole_count);
  auto in_hole = [&](int k, int l) {
    if (k < 0 || l < 0 || k >= f.nx || l >= f.ny) return false;
    return hole[static_cast<std::size_t>(k) * f.ny + l] >= 0;
  };

  std::vector<ContactPoint> out;
  for (int k = 0; k <= f.nx; ++k) {
    for (int l = 0; l <= f.ny; ++l) {
      const bool tl = a.contains(k - 1, l);
      const bool tr = a.contains(k, l);
      const bool bl = a.contains(k - 1, l - 1);
      const bool br = a.contains(k, l - 1);
      ContactType type;
      if (tr && bl && !tl && !br) {
        const bool h_tl = in_hole(k - 1, l);
        const bool h_br = in_hole(k, l - 1);
        type = h_tl && h_br   ? ContactType::DoubleHole
               : h_tl         ? ContactType::Haxa
               : h_br         ? ContactType::Xaha
                              : ContactType::Separating;
      } else if (tl && br && !tr && !bl) {
        const bool h_tr = in_hole(k, l);
        const bool h_bl = in_hole(k - 1, l - 1);
        type = h_tr && h_bl   ? ContactType::DoubleHole
               : h_tr         ? ContactType::Ahax
               : h_bl         ? ContactType::Axah
                              : ContactType::Separating;
      } else {
        continue;
      }
      out.push_back({k, l, type});
    }
  }
  return out;
}

std::string contact_type_name(ContactType t) {
  switch (t) {
    case ContactType::Haxa: return "haxa";
    case ContactType::Ahax: return "ahax";
    case ContactType::Xaha: return "xaha";
    case ContactType::Axah: return "axah";
    case ContactType::Separating: return "separating";
    case ContactType::DoubleHole: return "double-hole";
  }
  return "?";
}

}  // namespace cdc

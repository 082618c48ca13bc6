#include <stdexcept>
#include <tuple>

#include "cdc/solver.hpp"

namespace cdc {

namespace {

constexpr int S = kSubdivision;

PixelRegion refine(const PixelRegion& a) {
  const Frame f = a.frame();
  PixelRegion out(Frame{f.nx * S, f.ny * S});
  for (int k = 0; k < f.nx; ++k)
    for (int l = 0; l < f.ny; ++l)
      if (a.contains(k, l))
        for (int dk = 0; dk < S; ++dk)
          for (int dl = 0; dl < S; ++dl) out.set(k * S + dk, l * S + dl);
  return out;
}

// Removes, at each contact point P of the coarse region, the sub-pixel at P
// of the region pixel that follows the hole pixel clockwise.
void cut_contact_corners(const PixelRegion& coarse, PixelRegion& fine) {
  for (const auto& cp : contact_points(coarse)) {
    const int fk = cp.k * S;
    const int fl = cp.l * S;
    switch (cp.type) {
      case ContactType::Haxa: fine.set(fk, fl, false); break;
      case ContactType::Ahax: fine.set(fk, fl - 1, false); break;
      case ContactType::Xaha: fine.set(fk - 1, fl - 1, false); break;
      case ContactType::Axah: fine.set(fk - 1, fl, false); break;
      case ContactType::Separating:
      case ContactType::DoubleHole:
        throw std::invalid_argument("region has a " + contact_type_name(cp.type) +
                                    " contact point at (" + std::to_string(cp.k) + ',' +
                                    std::to_string(cp.l) + ')');
    }
  }
}

// The anchor of a hole: among its coarse pixels whose left neighbour is not
// in the hole, the topmost, leftmost one.
std::pair<int, int> hole_anchor(const PixelRegion& coarse, const PixelRegion& fine_hole) {
  const Frame f = coarse.frame();
  auto in_hole = [&](int k, int l) {
    return k >= 0 && l >= 0 && k < f.nx && l < f.ny && !coarse.contains(k, l) &&
           fine_hole.contains(k * S, l * S);
  };
  int best_k = -1;
  int best_l = -1;
  for (int k = 0; k < f.nx; ++k) {
    for (int l = 0; l < f.ny; ++l) {
      if (!in_hole(k, l) || in_hole(k - 1, l)) continue;
      if (best_k < 0 || l > best_l || (l == best_l && k < best_k)) {
        best_k = k;
        best_l = l;
      }
    }
  }
  return {best_k, best_l};
}

void cut_slots(const PixelRegion& coarse, PixelRegion& fine) {
  for (;;) {
    const auto holes = holes_of(fine);
    if (holes.empty()) return;
    std::pair<int, int> pick{-1, -1};
    for (const auto& h : holes) {
      const auto anchor = hole_anchor(coarse, h);
      if (anchor.first < 0)
        throw std::logic_error("hole of the refined region holds no whole coarse pixel");
      if (pick.first < 0 || anchor < pick) pick = anchor;
    }
    const auto [k, l] = pick;
    int cut = 0;
    for (int up = l + 1; coarse.contains(k, up); ++up, ++cut)
      for (int dl = 0; dl < S; ++dl) fine.set(k * S + S / 2, up * S + dl, false);
    if (cut == 0 || holes_of(fine).size() >= holes.size())
      throw std::logic_error("slot cut did not open a hole");
  }
}

}  // namespace

std::vector<PixelRegion> simplify_solution(const SolveOutcome& outcome) {
  if (!outcome.consistent) throw std::invalid_argument("simplify needs a consistent outcome");
  std::vector<PixelRegion> out;
  out.reserve(outcome.solution.size());
  for (const auto& a : outcome.solution) {
    PixelRegion fine = refine(a);
    cut_contact_corners(a, fine);
    cut_slots(a, fine);
    out.push_back(std::move(fine));
  }
  return out;
}

}  // namespace cdc

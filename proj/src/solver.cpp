#include "cdc/solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cdc/solver_steps.hpp"

namespace cdc {

std::string Stage::to_string() const {
  std::ostringstream os;
  switch (tag) {
    case StageTag::ProjectiveX:
    case StageTag::ProjectiveY:
      os << "projective " << (tag == StageTag::ProjectiveX ? 'x' : 'y') << " network inconsistent";
      if (i >= 0) os << " at pair (" << i + 1 << ',' << j + 1 << ')';
      break;
    case StageTag::ComponentMissing:
      os << "no candidate region for variable " << i + 1;
      break;
    case StageTag::VerificationFailed:
      os << "variable " << i + 1 << " misses tile " << phi << " of variable " << j + 1;
      break;
  }
  return os.str();
}

namespace steps {

LayoutResult canonical_layout(const CdcBasicNetwork& net) {
  auto proj = projective_networks(net);
  if (proj.failure) {
    const auto& f = *proj.failure;
    return {std::nullopt,
            Stage{f.axis == Axis::X ? StageTag::ProjectiveX : StageTag::ProjectiveY, f.i, f.j, 0}};
  }
  auto xs = solve_basic_ia(proj.networks->x);
  if (!xs) return {std::nullopt, Stage{StageTag::ProjectiveX}};
  auto ys = solve_basic_ia(proj.networks->y);
  if (!ys) return {std::nullopt, Stage{StageTag::ProjectiveY}};

  CanonicalLayout out;
  out.x = std::move(*xs);
  out.y = std::move(*ys);
  for (std::size_t i = 0; i < out.x.size(); ++i) {
    out.frame.nx = std::max(out.frame.nx, out.x[i].hi);
    out.frame.ny = std::max(out.frame.ny, out.y[i].hi);
    out.mbrs.push_back({out.x[i].lo, out.x[i].hi, out.y[i].lo, out.y[i].hi});
  }
  return {std::move(out), std::nullopt};
}

IntGrid disallowed_count(int i, const CdcBasicNetwork& net, const std::vector<IntRect>& mbrs,
                         const Frame& frame) {
  IntGrid d(frame);
  for (int j = 0; j < net.size(); ++j) {
    if (j == i) continue;
    const DirectionMatrix delta = net.get(i, j);
    for (int phi = 1; phi <= 9; ++phi) {
      if (delta.tile(phi)) continue;
      const IntRect t = tile_rect(mbrs[j], phi, frame);
      if (t.pixel_empty()) continue;
      for (int l = t.y_lo; l < t.y_hi; ++l) {
        d.at(t.x_lo, l) += 1;
        if (t.x_hi < frame.nx) d.at(t.x_hi, l) -= 1;
      }
    }
  }
  return acc_grid(d);
}

PixelRegion allowed_region(int i, const CdcBasicNetwork& net, const std::vector<IntRect>& mbrs,
                           const Frame& frame) {
  const IntGrid q = disallowed_count(i, net, mbrs, frame);
  PixelRegion b(frame);
  const IntRect& m = mbrs[i];
  for (int k = m.x_lo; k < m.x_hi; ++k)
    for (int l = m.y_lo; l < m.y_hi; ++l)
      if (q.at(k, l) == 0) b.set(k, l);
  return b;
}

std::optional<PixelRegion> component_with_mbr(const PixelRegion& b, const IntRect& m) {
  for (auto& c : connected_components(b))
    if (mbr_of(c) == m) return std::move(c);
  return std::nullopt;
}

Candidates build_candidates(const CdcBasicNetwork& net, const CanonicalLayout& layout,
                            Model model) {
  Candidates out;
  for (int i = 0; i < net.size(); ++i) {
    PixelRegion b = allowed_region(i, net, layout.mbrs, layout.frame);
    if (model == Model::CdcD) {
      if (b.empty() || !(mbr_of(b) == layout.mbrs[i])) {
        out.failure = Stage{StageTag::ComponentMissing, i};
        return out;
      }
      out.regions.push_back(std::move(b));
      continue;
    }
    auto c = component_with_mbr(b, layout.mbrs[i]);
    if (!c) {
      out.failure = Stage{StageTag::ComponentMissing, i};
      return out;
    }
    out.regions.push_back(std::move(*c));
  }
  return out;
}

std::optional<Stage> verify_boundary(const std::vector<PixelRegion>& c, const CdcBasicNetwork& net,
                                     const std::vector<IntRect>& mbrs, const Frame& frame) {
  const int n = net.size();
  for (int i = 0; i < n; ++i) {
    const IntRect& m = mbrs[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const DirectionMatrix delta = net.get(i, j);
      for (int phi = 1; phi <= 9; ++phi) {
        if (!delta.tile(phi)) continue;
        const IntRect r = intersect(m, tile_rect(mbrs[j], phi, frame));
        const Stage fail{StageTag::VerificationFailed, i, j, phi};
        if (r.pixel_empty()) return fail;
        if (r == m) continue;
        // Border pixels of r only.
        bool hit = false;
        for (int l = r.y_lo; l < r.y_hi && !hit; ++l)
          hit = c[i].contains(r.x_lo, l) || c[i].contains(r.x_hi - 1, l);
        for (int k = r.x_lo; k < r.x_hi && !hit; ++k)
          hit = c[i].contains(k, r.y_lo) || c[i].contains(k, r.y_hi - 1);
        if (!hit) return fail;
      }
    }
  }
  return std::nullopt;
}

std::optional<Stage> verify_prefix(const std::vector<PixelRegion>& b, const CdcBasicNetwork& net,
                                   const std::vector<IntRect>& mbrs, const Frame& frame) {
  const int n = net.size();
  for (int i = 0; i < n; ++i) {
    const IntGrid prefix = count_prefix(b[i]);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const DirectionMatrix delta = net.get(i, j);
      for (int phi = 1; phi <= 9; ++phi) {
        if (!delta.tile(phi)) continue;
        if (!rect_has_pixel(prefix, tile_rect(mbrs[j], phi, frame)))
          return Stage{StageTag::VerificationFailed, i, j, phi};
      }
    }
  }
  return std::nullopt;
}

}  // namespace steps

SolveOutcome solve_basic(const CdcBasicNetwork& net, Model model) {
  if (!net.complete()) throw std::invalid_argument("basic network is incomplete");
  if (!net.valid_for(model))
    throw std::invalid_argument("network holds a matrix that is not valid for " +
                                std::string(model_name(model)));

  SolveOutcome out;
  auto layout = steps::canonical_layout(net);
  if (!layout.layout) {
    out.failure = layout.failure;
    return out;
  }
  out.frame = layout.layout->frame;
  out.mbrs = layout.layout->mbrs;

  auto cand = steps::build_candidates(net, *layout.layout, model);
  if (cand.failure) {
    out.failure = cand.failure;
    return out;
  }
  out.failure = model == Model::CdcD
                    ? steps::verify_prefix(cand.regions, net, out.mbrs, out.frame)
                    : steps::verify_boundary(cand.regions, net, out.mbrs, out.frame);
  if (out.failure) return out;
  out.consistent = true;
  out.solution = std::move(cand.regions);
  return out;
}

PixelRegion disallowed_pixels(int i, const CdcBasicNetwork& net, const std::vector<IntRect>& mbrs,
                              const Frame& frame) {
  const IntGrid q = steps::disallowed_count(i, net, mbrs, frame);
  PixelRegion p(frame);
  const IntRect& m = mbrs[i];
  for (int k = m.x_lo; k < m.x_hi; ++k)
    for (int l = m.y_lo; l < m.y_hi; ++l)
      if (q.at(k, l) > 0) p.set(k, l);
  return p;
}

bool verify_solution(const std::vector<PixelRegion>& regions, const CdcBasicNetwork& net,
                     Model model) {
  const int n = net.size();
  if (static_cast<int>(regions.size()) != n) return false;
  std::vector<IntRect> mbrs;
  for (const auto& r : regions) {
    if (!(r.frame() == regions.front().frame()) || r.empty()) return false;
    if (model != Model::CdcD && !is_4_connected(r)) return false;
    mbrs.push_back(mbr_of(r));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !(dir_of_digital(regions[i], mbrs[j]) == net.get(i, j))) return false;
  return true;
}

}  // namespace cdc

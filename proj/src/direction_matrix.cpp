#include "cdc/direction_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cdc {

namespace {

bool four_connected(std::uint16_t bits) {
  if (bits == 0) return false;
  std::uint16_t seen = static_cast<std::uint16_t>(bits & -bits);
  for (;;) {
    std::uint16_t grow = seen;
    for (int t = 0; t < 9; ++t) {
      if (!((seen >> t) & 1u)) continue;
      const int r = t / 3;
      const int c = t % 3;
      if (r > 0) grow |= 1u << (t - 3);
      if (r < 2) grow |= 1u << (t + 3);
      if (c > 0) grow |= 1u << (t - 1);
      if (c < 2) grow |= 1u << (t + 1);
    }
    grow &= bits;
    if (grow == seen) break;
    seen = grow;
  }
  return seen == bits;
}

}  // namespace

std::string_view model_name(Model m) {
  switch (m) {
    case Model::Cdc: return "cdc";
    case Model::CdcD: return "cdc-d";
    case Model::CdcS: return "cdc-s";
  }
  return "?";
}

std::optional<Model> model_from_name(std::string_view name) {
  if (name == "cdc") return Model::Cdc;
  if (name == "cdc-d") return Model::CdcD;
  if (name == "cdc-s") return Model::CdcS;
  return std::nullopt;
}

DirectionMatrix DirectionMatrix::parse(std::string_view text) {
  std::uint16_t bits = 0;
  int count = 0;
  for (char ch : text) {
    if (ch == '/') continue;
    if ((ch != '0' && ch != '1') || count >= 9)
      throw std::invalid_argument("malformed direction matrix '" + std::string(text) + "'");
    if (ch == '1') bits |= static_cast<std::uint16_t>(1u << count);
    ++count;
  }
  if (count != 9)
    throw std::invalid_argument("direction matrix needs 9 cells: '" + std::string(text) + "'");
  return from_bits(bits);
}

int DirectionMatrix::tile_count() const { return std::popcount(bits_); }

std::string DirectionMatrix::to_string(bool slashes) const {
  std::string out;
  for (int phi = 1; phi <= 9; ++phi) {
    out += tile(phi) ? '1' : '0';
    if (slashes && (phi == 3 || phi == 6)) out += '/';
  }
  return out;
}

bool is_valid_matrix(DirectionMatrix m, Model model) {
  if (m.is_zero()) return false;
  return model == Model::CdcD || four_connected(m.bits());
}

std::vector<DirectionMatrix> enumerate_basic(Model model) {
  std::vector<DirectionMatrix> out;
  for (std::uint16_t b = 1; b < 512; ++b) {
    const auto m = DirectionMatrix::from_bits(b);
    if (is_valid_matrix(m, model)) out.push_back(m);
  }
  return out;
}

DirectionVector x_projection(DirectionMatrix m) {
  auto col = [&](int c) { return m.at(1, c) || m.at(2, c) || m.at(3, c); };
  return {col(1), col(2) || (col(1) && col(3)), col(3)};
}

DirectionVector y_projection(DirectionMatrix m) {
  auto row = [&](int r) { return m.at(r, 1) || m.at(r, 2) || m.at(r, 3); };
  return {row(3), row(2) || (row(1) && row(3)), row(1)};
}

IaRelationSet projective_pair_relation(DirectionMatrix delta_ij, DirectionMatrix delta_ji,
                                       Axis axis) {
  const auto proj = axis == Axis::X ? x_projection : y_projection;
  return vector_to_ia(proj(delta_ij)) & converse_ia(vector_to_ia(proj(delta_ji)));
}

CdcBasicNetwork::CdcBasicNetwork(int n) : n_(n), rel_(static_cast<std::size_t>(n) * n) {
  if (n < 0) throw std::invalid_argument("negative network size");
}

void CdcBasicNetwork::set(int i, int j, DirectionMatrix m) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("variable index");
  if (i == j) throw std::invalid_argument("diagonal constraints are implicit");
  rel_[static_cast<std::size_t>(i) * n_ + j] = m;
}

bool CdcBasicNetwork::complete() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && get(i, j).is_zero()) return false;
  return true;
}

bool CdcBasicNetwork::valid_for(Model model) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !is_valid_matrix(get(i, j), model)) return false;
  return true;
}

CdcDisjunctiveNetwork::CdcDisjunctiveNetwork(int n)
    : n_(n), rel_(static_cast<std::size_t>(n) * n) {
  if (n < 0) throw std::invalid_argument("negative network size");
  for (int i = 0; i < n; ++i)
    rel_[static_cast<std::size_t>(i) * n + i] = {DirectionMatrix::center_only()};
}

void CdcDisjunctiveNetwork::set(int i, int j, std::vector<DirectionMatrix> candidates) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("variable index");
  if (i == j) throw std::invalid_argument("diagonal constraints are implicit");
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  rel_[static_cast<std::size_t>(i) * n_ + j] = std::move(candidates);
}

bool CdcDisjunctiveNetwork::all_singletons() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && get(i, j).size() != 1) return false;
  return true;
}

bool CdcDisjunctiveNetwork::valid_for(Model model) const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      const auto& c = get(i, j);
      if (c.empty()) return false;
      for (auto m : c)
        if (!is_valid_matrix(m, model)) return false;
    }
  }
  return true;
}

ProjectiveResult projective_networks(const CdcBasicNetwork& net) {
  const int n = net.size();
  ProjectiveNetworks nets{IaBasicNetwork(n), IaBasicNetwork(n)};
  for (Axis axis : {Axis::X, Axis::Y}) {
    IaBasicNetwork& target = axis == Axis::X ? nets.x : nets.y;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const auto rho =
            meet_free_refine(projective_pair_relation(net.get(i, j), net.get(j, i), axis));
        if (rho.empty()) return {std::nullopt, ProjectiveFailure{axis, i, j}};
        target.set(i, j, rho);
      }
    }
  }
  return {std::move(nets), std::nullopt};
}

DirectionMatrix dir_of_digital(const PixelRegion& a, const IntRect& mbr_b) {
  std::uint16_t bits = 0;
  for (int phi = 1; phi <= 9; ++phi) {
    const IntRect t = tile_rect(mbr_b, phi, a.frame());
    bool hit = false;
    for (int k = t.x_lo; k < t.x_hi && !hit; ++k)
      for (int l = t.y_lo; l < t.y_hi && !hit; ++l) hit = a.contains(k, l);
    if (hit) bits |= static_cast<std::uint16_t>(1u << (phi - 1));
  }
  return DirectionMatrix::from_bits(bits);
}

}  // namespace cdc

#include "cdc/interval_algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace cdc {

namespace {

constexpr std::array<std::string_view, kIaBasicCount> kNames = {
    "p", "m", "o", "s", "d", "f", "eq", "fi", "di", "si", "oi", "mi", "pi"};

// Sign of (x- vs y-), (x- vs y+), (x+ vs y-), (x+ vs y+) for each basic
// relation of x to y: -1 for <, 0 for =, +1 for >.
struct EndpointPattern {
  std::array<int, 4> sign;
};

constexpr std::array<EndpointPattern, kIaBasicCount> kPatterns = {{
    {{-1, -1, -1, -1}},  // p
    {{-1, -1, 0, -1}},   // m
    {{-1, -1, 1, -1}},   // o
    {{0, -1, 1, -1}},    // s
    {{1, -1, 1, -1}},    // d
    {{1, -1, 1, 0}},     // f
    {{0, -1, 1, 0}},     // eq
    {{-1, -1, 1, 0}},    // fi
    {{-1, -1, 1, 1}},    // di
    {{0, -1, 1, 1}},     // si
    {{1, -1, 1, 1}},     // oi
    {{1, 0, 1, 1}},      // mi
    {{1, 1, 1, 1}},      // pi
}};

constexpr int sgn(int a, int b) { return (a > b) - (a < b); }

// Rows and columns follow the vector order (1,0,0) (0,1,0) (0,0,1) (1,1,0)
// (0,1,1) (1,1,1).
constexpr std::array<std::uint8_t, 6> kVectorOrder = {1, 2, 4, 3, 6, 7};

int vector_slot(DirectionVector v) {
  for (int k = 0; k < 6; ++k)
    if (kVectorOrder[k] == v.code()) return k;
  return -1;
}

using R = IaBasic;
const std::array<std::array<IaRelationSet, 6>, 6> kVectorPairTable = {{
    {{{}, {}, {R::p, R::m}, {}, {}, {}}},
    {{{}, {R::eq}, {}, {R::f}, {R::s}, {R::d}}},
    {{{R::pi, R::mi}, {}, {}, {}, {}, {}}},
    {{{}, {R::fi}, {}, {}, {R::o}, {}}},
    {{{}, {R::si}, {}, {R::oi}, {}, {}}},
    {{{}, {R::di}, {}, {}, {}, {}}},
}};

// Plain union-find over endpoint indices.
class Classes {
 public:
  explicit Classes(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

IntInterval::IntInterval(int lo_, int hi_) : lo(lo_), hi(hi_) {
  if (lo >= hi) throw std::invalid_argument("interval requires lo < hi");
}

std::string_view ia_name(IaBasic r) { return kNames[static_cast<int>(r)]; }

std::optional<IaBasic> ia_from_name(std::string_view name) {
  for (int k = 0; k < kIaBasicCount; ++k)
    if (kNames[k] == name) return static_cast<IaBasic>(k);
  return std::nullopt;
}

int IaRelationSet::size() const { return std::popcount(mask_); }

IaBasic IaRelationSet::single() const {
  return static_cast<IaBasic>(std::countr_zero(mask_));
}

std::vector<IaBasic> IaRelationSet::members() const {
  std::vector<IaBasic> out;
  for (int k = 0; k < kIaBasicCount; ++k)
    if (mask_ & (1u << k)) out.push_back(static_cast<IaBasic>(k));
  return out;
}

std::string IaRelationSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (IaBasic r : members()) {
    if (!first) out += ",";
    out += ia_name(r);
    first = false;
  }
  return out + "}";
}

IaBasic basic_ia_of(const IntInterval& x, const IntInterval& y) {
  const std::array<int, 4> s = {sgn(x.lo, y.lo), sgn(x.lo, y.hi), sgn(x.hi, y.lo),
                                sgn(x.hi, y.hi)};
  for (int k = 0; k < kIaBasicCount; ++k)
    if (kPatterns[k].sign == s) return static_cast<IaBasic>(k);
  throw std::logic_error("endpoint pattern matches no basic relation");
}

IaRelationSet converse_ia(IaRelationSet r) {
  std::uint16_t out = 0;
  for (int k = 0; k < kIaBasicCount; ++k)
    if (r.mask() & (1u << k)) out |= static_cast<std::uint16_t>(1u << (12 - k));
  return IaRelationSet::from_mask(out);
}

std::string DirectionVector::to_string() const {
  std::string out = "(";
  out += d1() ? '1' : '0';
  out += ',';
  out += d2() ? '1' : '0';
  out += ',';
  out += d3() ? '1' : '0';
  return out + ")";
}

DirectionVector direction_vector(const IntInterval& i, const IntInterval& j) {
  const bool below = i.lo < j.lo;
  const bool inside = std::max(i.lo, j.lo) < std::min(i.hi, j.hi);
  const bool above = i.hi > j.hi;
  return {below, inside, above};
}

IaRelationSet vector_to_ia(DirectionVector v) {
  switch (v.code()) {
    case 1: return {R::p, R::m};
    case 2: return {R::s, R::d, R::f, R::eq};
    case 4: return {R::pi, R::mi};
    case 3: return {R::o, R::fi};
    case 6: return {R::oi, R::si};
    case 7: return {R::di};
    default: break;
  }
  throw std::invalid_argument("invalid direction vector " + v.to_string());
}

IaRelationSet vector_pair_to_basic(DirectionVector s, DirectionVector t) {
  const int row = vector_slot(s);
  const int col = vector_slot(t);
  if (row < 0 || col < 0)
    throw std::invalid_argument("invalid direction vector pair " + s.to_string() + " " +
                                t.to_string());
  return kVectorPairTable[row][col];
}

IaRelationSet meet_free_refine(IaRelationSet r) {
  if (r.empty()) return r;
  if (r == IaRelationSet{R::p, R::m}) return {R::p};
  if (r == IaRelationSet{R::pi, R::mi}) return {R::pi};
  if (r.is_singleton() && r.single() != R::m && r.single() != R::mi) return r;
  throw std::invalid_argument("meet_free_refine: " + r.to_string() + " outside domain");
}

IaBasicNetwork::IaBasicNetwork(int n) : n_(n), rel_(static_cast<std::size_t>(n) * n) {
  if (n < 0) throw std::invalid_argument("negative network size");
  for (int i = 0; i < n; ++i) rel_[static_cast<std::size_t>(i) * n + i] = {R::eq};
}

void IaBasicNetwork::set(int i, int j, IaRelationSet r) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
    throw std::out_of_range("IaBasicNetwork::set index");
  if (r.size() > 1) throw std::invalid_argument("basic network needs a singleton relation");
  rel_[static_cast<std::size_t>(i) * n_ + j] = r;
  rel_[static_cast<std::size_t>(j) * n_ + i] = converse_ia(r);
}

IaRelationSet IaBasicNetwork::get(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("IaBasicNetwork::get index");
  return rel_[static_cast<std::size_t>(i) * n_ + j];
}

std::optional<std::vector<IntInterval>> solve_basic_ia(const IaBasicNetwork& net) {
  const int n = net.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (net.get(i, j).empty()) return std::nullopt;

  // Endpoint 2i is the lower end of interval i, 2i + 1 the upper end.
  const int endpoints = 2 * n;
  auto lo = [](int i) { return 2 * i; };
  auto hi = [](int i) { return 2 * i + 1; };

  Classes classes(endpoints);
  std::vector<std::pair<int, int>> strict;
  strict.reserve(static_cast<std::size_t>(n) * (2 * n + 1));
  for (int i = 0; i < n; ++i) strict.emplace_back(lo(i), hi(i));

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& pat = kPatterns[static_cast<int>(net.get(i, j).single())].sign;
      const std::array<std::pair<int, int>, 4> ends = {
          {{lo(i), lo(j)}, {lo(i), hi(j)}, {hi(i), lo(j)}, {hi(i), hi(j)}}};
      for (int k = 0; k < 4; ++k) {
        const auto [a, b] = ends[k];
        if (pat[k] == 0)
          classes.unite(a, b);
        else if (pat[k] < 0)
          strict.emplace_back(a, b);
        else
          strict.emplace_back(b, a);
      }
    }
  }

  std::vector<int> class_of(endpoints);
  for (int e = 0; e < endpoints; ++e) class_of[e] = classes.find(e);

  std::vector<std::vector<int>> succ(endpoints);
  std::vector<int> indegree(endpoints, 0);
  for (auto [a, b] : strict) {
    const int ca = class_of[a];
    const int cb = class_of[b];
    if (ca == cb) return std::nullopt;
    succ[ca].push_back(cb);
    ++indegree[cb];
  }

  // Longest-path layering of the class DAG; ranks are 0..M when the order
  // is total.
  std::vector<int> rank(endpoints, 0);
  std::queue<int> ready;
  int roots = 0;
  for (int e = 0; e < endpoints; ++e) {
    if (class_of[e] != e) continue;
    ++roots;
    if (indegree[e] == 0) ready.push(e);
  }
  int processed = 0;
  while (!ready.empty()) {
    const int c = ready.front();
    ready.pop();
    ++processed;
    for (int s : succ[c]) {
      rank[s] = std::max(rank[s], rank[c] + 1);
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (processed != roots) return std::nullopt;

  std::vector<IntInterval> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.emplace_back(rank[class_of[lo(i)]], rank[class_of[hi(i)]]);
  return out;
}

}  // namespace cdc

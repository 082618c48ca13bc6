#pragma once

// Allen interval algebra kernel: basic relations, relation sets, direction
// vectors and canonical solutions of basic interval networks.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cdc {

/// Closed integer interval [lo, hi] with lo < hi.
struct IntInterval {
  int lo = 0;
  int hi = 1;

  IntInterval() = default;
  IntInterval(int lo_, int hi_);

  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// The 13 basic Allen relations. The enumerators are laid out so that the
/// converse of relation r is relation (12 - r).
enum class IaBasic : std::uint8_t { p, m, o, s, d, f, eq, fi, di, si, oi, mi, pi };

inline constexpr int kIaBasicCount = 13;

std::string_view ia_name(IaBasic r);
std::optional<IaBasic> ia_from_name(std::string_view name);

constexpr IaBasic converse(IaBasic r) {
  return static_cast<IaBasic>(12 - static_cast<int>(r));
}

/// A (possibly empty) disjunction of basic interval relations.
class IaRelationSet {
 public:
  constexpr IaRelationSet() = default;
  constexpr IaRelationSet(std::initializer_list<IaBasic> members) {
    for (IaBasic r : members) mask_ |= bit(r);
  }
  static constexpr IaRelationSet from_mask(std::uint16_t mask) {
    IaRelationSet s;
    s.mask_ = mask & kAll;
    return s;
  }
  static constexpr IaRelationSet all() { return from_mask(kAll); }

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(IaBasic r) const { return (mask_ & bit(r)) != 0; }
  int size() const;
  bool is_singleton() const { return size() == 1; }
  /// The single member; only meaningful when is_singleton().
  IaBasic single() const;
  std::vector<IaBasic> members() const;

  constexpr IaRelationSet operator&(IaRelationSet o) const { return from_mask(mask_ & o.mask_); }
  constexpr IaRelationSet operator|(IaRelationSet o) const { return from_mask(mask_ | o.mask_); }
  constexpr IaRelationSet without(IaRelationSet o) const { return from_mask(mask_ & ~o.mask_); }

  std::string to_string() const;

  friend constexpr bool operator==(IaRelationSet, IaRelationSet) = default;

 private:
  static constexpr std::uint16_t kAll = (1u << kIaBasicCount) - 1;
  static constexpr std::uint16_t bit(IaBasic r) {
    return static_cast<std::uint16_t>(1u << static_cast<int>(r));
  }
  std::uint16_t mask_ = 0;
};

/// Basic relation of x to y, read off the endpoint order.
IaBasic basic_ia_of(const IntInterval& x, const IntInterval& y);

/// Member-wise converse.
IaRelationSet converse_ia(IaRelationSet r);

/// One-dimensional direction of an interval I relative to J: slot 1 is the
/// part of the line at or below J's lower end, slot 2 J's open interior and
/// slot 3 the part at or above J's upper end.
class DirectionVector {
 public:
  constexpr DirectionVector() = default;
  constexpr DirectionVector(bool d1, bool d2, bool d3)
      : code_(static_cast<std::uint8_t>((d1 ? 1 : 0) | (d2 ? 2 : 0) | (d3 ? 4 : 0))) {}
  static constexpr DirectionVector from_code(std::uint8_t code) {
    DirectionVector v;
    v.code_ = code & 7;
    return v;
  }

  constexpr bool d1() const { return (code_ & 1) != 0; }
  constexpr bool d2() const { return (code_ & 2) != 0; }
  constexpr bool d3() const { return (code_ & 4) != 0; }
  constexpr std::uint8_t code() const { return code_; }

  /// Realizable by some pair of intervals: nonzero and not (1,0,1).
  constexpr bool valid() const { return code_ != 0 && code_ != 5; }

  std::string to_string() const;

  friend constexpr bool operator==(DirectionVector, DirectionVector) = default;

 private:
  std::uint8_t code_ = 0;
};

DirectionVector direction_vector(const IntInterval& i, const IntInterval& j);

/// The interval relation a valid direction vector stands for. Throws
/// std::invalid_argument for (0,0,0) and (1,0,1).
IaRelationSet vector_to_ia(DirectionVector v);

/// Relation between I and J given dir(I,J) = s and dir(J,I) = t: empty, a
/// single basic relation, or {p,m} / {pi,mi}.
IaRelationSet vector_pair_to_basic(DirectionVector s, DirectionVector t);

/// Drops meets from {p,m} and {pi,mi}; every other member of the domain is
/// returned unchanged. The domain is the empty set, the nine non-meet basic
/// relations and the two before-or-meets sets; anything else throws
/// std::invalid_argument.
IaRelationSet meet_free_refine(IaRelationSet r);

/// Basic interval network, closed under converse by construction: setting
/// (i, j) also sets (j, i). Unset pairs hold the empty relation.
class IaBasicNetwork {
 public:
  explicit IaBasicNetwork(int n);

  int size() const { return n_; }
  /// r must be empty or a singleton.
  void set(int i, int j, IaRelationSet r);
  void set(int i, int j, IaBasic r) { set(i, j, IaRelationSet{r}); }
  IaRelationSet get(int i, int j) const;

  friend bool operator==(const IaBasicNetwork&, const IaBasicNetwork&) = default;

 private:
  int n_;
  std::vector<IaRelationSet> rel_;
};

/// Canonical interval solution (endpoint set exactly {0..M}) of a basic
/// network, or nullopt when the endpoint order constraints are cyclic or some
/// pair carries the empty relation.
std::optional<std::vector<IntInterval>> solve_basic_ia(const IaBasicNetwork& net);

}  // namespace cdc

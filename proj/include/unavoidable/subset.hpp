#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace unav {

/// Largest supported ground set. Faces live in one machine word.
inline constexpr int kMaxGroundSize = 63;

/// A set of vertices drawn from the ground set [m] = {1, ..., m}.
///
/// Vertices are 1-based at the interface; vertex v occupies bit v-1.
class Subset {
 public:
  using Bits = std::uint64_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  /// Builds a subset from 1-based vertex indices; throws on indices outside [1, 63].
  static Subset of(std::initializer_list<int> vertices);
  static Subset of(const std::vector<int>& vertices);

  /// The full ground set [m].
  static constexpr Subset range(int m) {
    return Subset(m >= 64 ? ~Bits{0} : ((Bits{1} << m) - 1));
  }
  static constexpr Subset singleton(int v) { return Subset(Bits{1} << (v - 1)); }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest member (1-based), or 0 when empty.
  constexpr int lowest() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest member (1-based), or 0 when empty.
  constexpr int highest() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  constexpr Subset with(int v) const { return Subset(bits_ | (Bits{1} << (v - 1))); }
  constexpr Subset without(int v) const { return Subset(bits_ & ~(Bits{1} << (v - 1))); }

  /// Complement inside [m].
  constexpr Subset complement(int m) const { return Subset(range(m).bits_ & ~bits_); }

  /// Relabels vertex v to v + offset.
  constexpr Subset shifted(int offset) const { return Subset(bits_ << offset); }

  std::vector<int> members() const;

  /// "{1,3,4}", "{}" for the empty set.
  std::string to_string() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;

 private:
  Bits bits_ = 0;
};

/// Lexicographic order on increasing member sequences:
/// {1,2} < {1,2,3} < {1,3} < {2}. The empty set comes first.
constexpr bool canonical_less(Subset a, Subset b) {
  Subset::Bits x = a.bits();
  Subset::Bits y = b.bits();
  while (x != 0 && y != 0) {
    const Subset::Bits lx = x & (~x + 1);
    const Subset::Bits ly = y & (~y + 1);
    if (lx != ly) return lx < ly;
    x ^= lx;
    y ^= ly;
  }
  return x == 0 && y != 0;
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<Subset>& sets);

/// Calls fn(sub) for every subset of `set`, including the empty set and `set` itself.
template <typename Fn>
void for_each_subset_of(Subset set, Fn&& fn) {
  const Subset::Bits full = set.bits();
  Subset::Bits sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace unav

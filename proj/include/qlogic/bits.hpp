#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qlogic {

using Element = int;
using Mask = std::uint64_t;

/// Hard cap on carrier and frame sizes: one machine word per row.
inline constexpr std::size_t kMaxSize = 64;

constexpr Mask bit(Element i) { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool has(Mask m, Element i) { return (m >> i) & 1u; }

constexpr int popcount(Mask m) { return std::popcount(m); }

/// Calls fn(i) for every set bit, lowest first.
template <class Fn>
constexpr void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    const int i = std::countr_zero(m);
    fn(static_cast<Element>(i));
    m &= m - 1;
  }
}

inline std::vector<Element> elements_of(Mask m) {
  std::vector<Element> out;
  for_each_bit(m, [&](Element i) { out.push_back(i); });
  return out;
}

/// Subset of the points of a frame.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(Mask bits) : bits_(bits) {}

  static constexpr PointSet all(std::size_t m) { return PointSet(full_mask(m)); }
  static constexpr PointSet single(Element p) { return PointSet(bit(p)); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Element p) const { return has(bits_, p); }
  constexpr int size() const { return popcount(bits_); }
  constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr void insert(Element p) { bits_ |= bit(p); }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet, PointSet) = default;

  std::vector<Element> points() const { return elements_of(bits_); }

 private:
  Mask bits_ = 0;
};

/// Reflexive-transitive closure of a relation given as rows (row[a] bit b = a R b).
inline std::vector<Mask> reflexive_transitive_closure(std::vector<Mask> rows) {
  const std::size_t n = rows.size();
  for (std::size_t a = 0; a < n; ++a) rows[a] |= bit(static_cast<Element>(a));
  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (has(rows[a], static_cast<Element>(k))) rows[a] |= rows[k];
    }
  }
  return rows;
}

/// Image of a set under a relation given by rows.
inline Mask relational_image(const std::vector<Mask>& rows, Mask u) {
  Mask out = 0;
  for_each_bit(u, [&](Element p) { out |= rows[p]; });
  return out;
}

}  // namespace qlogic

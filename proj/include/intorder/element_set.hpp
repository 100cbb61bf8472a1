#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace intorder {

/// Subset of a ground set {1,...,n}, n <= 64, stored as a bit mask.
/// Element e occupies bit (e-1). All operations are exact set operations;
/// the owning matroid knows the width n.
class ElementSet {
 public:
  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) { return ElementSet(bits); }

  static ElementSet of(std::initializer_list<int> elems) {
    ElementSet s;
    for (int e : elems) s.insert(e);
    return s;
  }

  static ElementSet from_elements(const std::vector<int>& elems) {
    ElementSet s;
    for (int e : elems) s.insert(e);
    return s;
  }

  /// The full ground set {1,...,n}.
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1ULL; }
  void insert(int e) { bits_ |= bit(e); }
  void erase(int e) { bits_ &= ~bit(e); }

  ElementSet with(int e) const { return ElementSet(bits_ | bit(e)); }
  ElementSet without(int e) const { return ElementSet(bits_ & ~bit(e)); }

  /// Smallest element; undefined on the empty set.
  int min() const { return std::countr_zero(bits_) + 1; }

  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(ElementSet a, ElementSet b) { return a.bits_ != b.bits_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t m = bits_; m; m &= m - 1) f(std::countr_zero(m) + 1);
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int e) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    });
    return s + "}";
  }

 private:
  explicit constexpr ElementSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr std::uint64_t bit(int e) { return 1ULL << (e - 1); }

  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element sequences: the set owning the
/// smallest element of the symmetric difference comes first. Proper prefixes
/// sort before their extensions, so this is a total order on all subsets.
inline bool lex_set_less(ElementSet a, ElementSet b) {
  std::uint64_t x = a.bits() ^ b.bits();
  if (x == 0) return false;
  return (a.bits() & (x & (~x + 1))) != 0;
}

/// Canonical output order for set lists: by cardinality, then lexicographic.
inline bool canonical_set_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_set_less(a, b);
}

}  // namespace intorder

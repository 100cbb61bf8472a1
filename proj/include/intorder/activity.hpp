#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "intorder/matroid.hpp"
#include "intorder/ordering.hpp"

namespace intorder {

/// The partition B = S + T + A of a basis: S = IP(B) - B0 (perpetually
/// passive), T = IP(B) ∩ B0 (provisionally passive), A = IA(B). f_parts maps
/// each f in S to its part T(B;f), a subset of T.
struct StaDecomposition {
  ElementSet basis;
  ElementSet s, t, a;
  std::vector<std::pair<int, ElementSet>> f_parts;  // keyed by f, ascending element order

  ElementSet part_of(int f) const {
    for (const auto& [g, p] : f_parts)
      if (g == f) return p;
    return ElementSet();
  }
};

class OrderedMatroid;

/// Result of an ordered deletion or contraction: the minor carries the
/// induced order; the relabeling maps between old and new ground sets.
struct OrderedMinor;

/// A matroid with a linear order on its ground set. Construction caches the
/// initial basis and the internally passive set of every basis; instances
/// are immutable and safe to share across threads.
class OrderedMatroid {
 public:
  OrderedMatroid(Matroid m, Ordering order);

  const Matroid& matroid() const { return m_; }
  const Ordering& ordering() const { return ord_; }
  int n() const { return m_.n(); }

  ElementSet initial_basis() const { return b0_; }
  int initial_basis_index() const { return b0_index_; }

  /// IA(b) = elements f of b that are minimal in their fundamental cocircuit.
  ElementSet internally_active(ElementSet b) const;
  ElementSet internally_passive(ElementSet b) const;
  ElementSet ip_of_index(int basis_index) const { return ip_[basis_index]; }

  /// Elements e admitting a circuit C inside f_set + e with e = min C.
  ElementSet active_elements(ElementSet f_set) const;

  /// Lexicographically-least basis containing the independent set (greedy).
  ElementSet min_basis(ElementSet independent) const;
  int min_basis_index(ElementSet independent) const;

  StaDecomposition sta_decomposition(ElementSet b) const;
  StaDecomposition sta_of_index(int basis_index) const;

  bool is_principal(ElementSet b) const;
  bool is_clean(ElementSet b) const;

  /// Lexicographic comparison of equal-cardinality sets under this order.
  bool lex_less(ElementSet a, ElementSet b) const;

  std::uint64_t position_mask(ElementSet s) const {
    std::uint64_t m = 0;
    s.for_each([&](int e) { m |= posbit_[e]; });
    return m;
  }

  /// Minor with the induced order (surviving elements keep relative order).
  OrderedMinor deleted(ElementSet t) const;
  OrderedMinor contracted(ElementSet t) const;

  int checked_index(ElementSet b) const;  // throws not_a_basis

 private:
  Matroid m_;
  Ordering ord_;
  std::vector<std::uint64_t> posbit_;  // posbit_[e] = 1 << (position(e)-1)
  std::vector<ElementSet> ip_;         // per basis index
  ElementSet b0_;
  int b0_index_ = 0;
};

struct OrderedMinor {
  OrderedMatroid om;
  RelabelMap relabel;
};

/// Renders a decomposition as the compact S^T_A node label, parts listed in
/// increasing position order ("∅" for an empty S part).
std::string sta_label(const StaDecomposition& d, const Ordering& order);

/// Number of bases with |IP| = i, for i = 0..max. Equals the h-vector of the
/// matroid up to trailing zeros, independently of the chosen order.
std::vector<long long> height_counts(const OrderedMatroid& om);

}  // namespace intorder

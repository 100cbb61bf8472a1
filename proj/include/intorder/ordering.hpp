#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "intorder/element_set.hpp"
#include "intorder/errors.hpp"

namespace intorder {

/// A bijection from the ground set {1..n} to positions {1..n}. Position 1 is
/// the smallest element of the induced linear order.
class Ordering {
 public:
  static Ordering identity(int n) {
    Ordering o;
    o.pos_.resize(n + 1);
    o.by_pos_.resize(n + 1);
    for (int e = 1; e <= n; ++e) {
      o.pos_[e] = e;
      o.by_pos_[e] = e;
    }
    return o;
  }

  /// From an order list [e1,...,en] meaning e1 is smallest.
  static Ordering from_order(const std::vector<int>& elems) {
    const int n = static_cast<int>(elems.size());
    Ordering o;
    o.pos_.assign(n + 1, 0);
    o.by_pos_.assign(n + 1, 0);
    for (int p = 1; p <= n; ++p) {
      int e = elems[p - 1];
      if (e < 1 || e > n || o.pos_[e] != 0)
        fail(Errc::not_a_bijection, "order list is not a bijection on [" + std::to_string(n) + "]");
      o.pos_[e] = p;
      o.by_pos_[p] = e;
    }
    return o;
  }

  int n() const { return static_cast<int>(pos_.size()) - 1; }
  int position(int e) const { return pos_[e]; }
  int element_at(int p) const { return by_pos_[p]; }
  bool less(int e, int f) const { return pos_[e] < pos_[f]; }

  bool is_identity() const {
    for (int e = 1; e <= n(); ++e)
      if (pos_[e] != e) return false;
    return true;
  }

  std::vector<int> to_order_list() const {
    return std::vector<int>(by_pos_.begin() + 1, by_pos_.end());
  }

  /// Order induced on a minor: surviving elements, given as old_of_new
  /// (1-based, old labels ascending is not required), keep their relative
  /// order and are compressed to positions 1..n'.
  Ordering induced(const std::vector<int>& old_of_new) const {
    const int m = static_cast<int>(old_of_new.size()) - 1;
    std::vector<std::pair<int, int>> keyed;  // (old position, new id)
    keyed.reserve(m);
    for (int i = 1; i <= m; ++i) keyed.emplace_back(pos_[old_of_new[i]], i);
    std::sort(keyed.begin(), keyed.end());
    Ordering o;
    o.pos_.assign(m + 1, 0);
    o.by_pos_.assign(m + 1, 0);
    for (int p = 1; p <= m; ++p) {
      o.pos_[keyed[p - 1].second] = p;
      o.by_pos_[p] = keyed[p - 1].second;
    }
    return o;
  }

 private:
  std::vector<int> pos_;     // pos_[e] = position of element e
  std::vector<int> by_pos_;  // by_pos_[p] = element at position p
};

}  // namespace intorder

#pragma once

// Brute-force reference implementations used as test oracles. Everything here
// works straight from definitions (set scans, cofactor determinants) and
// deliberately avoids the library's computation paths.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "intorder/activity.hpp"
#include "intorder/matroid.hpp"

namespace oracles {

using intorder::ElementSet;
using intorder::Matroid;
using intorder::OrderedMatroid;
using intorder::Ordering;
using intorder::RationalMatrix;

// A set is independent iff it is contained in some basis.
inline bool independent(const Matroid& m, ElementSet s) {
  for (const ElementSet& b : m.bases())
    if (s.subset_of(b)) return true;
  return false;
}

// Determinant by cofactor expansion over exact rationals.
inline mpq_class det(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  mpq_class sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<mpq_class>> minor(n - 1, std::vector<mpq_class>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = a[r][c];
      }
    }
    mpq_class term = a[0][j] * det(minor);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

// Column-subset rank by scanning square submatrices for a nonzero determinant.
inline int rank_of_columns(const RationalMatrix& m, const std::vector<int>& cols) {
  const int rows = m.rows();
  const int k = static_cast<int>(cols.size());
  for (int size = std::min(rows, k); size >= 1; --size) {
    // iterate over all row and column selections of the given size
    std::vector<int> ridx(size);
    for (int i = 0; i < size; ++i) ridx[i] = i;
    while (true) {
      std::vector<int> cidx(size);
      for (int i = 0; i < size; ++i) cidx[i] = i;
      while (true) {
        std::vector<std::vector<mpq_class>> sub(size, std::vector<mpq_class>(size));
        for (int r = 0; r < size; ++r)
          for (int c = 0; c < size; ++c) sub[r][c] = m.at(ridx[r], cols[cidx[c]]);
        if (det(sub) != 0) return size;
        int i = size - 1;
        while (i >= 0 && cidx[i] == k - size + i) --i;
        if (i < 0) break;
        ++cidx[i];
        for (int j = i + 1; j < size; ++j) cidx[j] = cidx[j - 1] + 1;
      }
      int i = size - 1;
      while (i >= 0 && ridx[i] == rows - size + i) --i;
      if (i < 0) break;
      ++ridx[i];
      for (int j = i + 1; j < size; ++j) ridx[j] = ridx[j - 1] + 1;
    }
  }
  return 0;
}

// Vector-matroid bases straight from determinants.
inline std::vector<ElementSet> bases_from_matrix(const RationalMatrix& m) {
  std::vector<int> all(m.cols());
  for (int c = 0; c < m.cols(); ++c) all[c] = c;
  const int r = rank_of_columns(m, all);
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (1ULL << m.cols()); ++mask) {
    ElementSet s = ElementSet::from_bits(mask);
    if (s.size() != r) continue;
    std::vector<int> cols;
    s.for_each([&](int e) { cols.push_back(e - 1); });
    if (r == 0 || rank_of_columns(m, cols) == r) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), intorder::canonical_set_less);
  return out;
}

// All inclusion-minimal dependent sets, by direct subset scanning.
inline std::vector<ElementSet> circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (1ULL << m.n()); ++mask) {
    ElementSet s = ElementSet::from_bits(mask);
    if (independent(m, s)) continue;
    bool minimal = true;
    s.for_each([&](int e) {
      if (minimal && !independent(m, s.without(e))) minimal = false;
    });
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), intorder::canonical_set_less);
  return out;
}

// Minimal sets whose removal drops the rank (no basis avoids them).
inline std::vector<ElementSet> cocircuits(const Matroid& m) {
  auto hits_every_basis = [&](ElementSet s) {
    for (const ElementSet& b : m.bases())
      if (!b.intersects(s)) return false;
    return true;
  };
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (1ULL << m.n()); ++mask) {
    ElementSet s = ElementSet::from_bits(mask);
    if (!hits_every_basis(s)) continue;
    bool minimal = true;
    s.for_each([&](int e) {
      if (minimal && hits_every_basis(s.without(e))) minimal = false;
    });
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), intorder::canonical_set_less);
  return out;
}

// Minimal dependent subsets of b ∪ e; the fundamental circuit must be the
// unique one.
inline ElementSet fundamental_circuit(const Matroid& m, ElementSet b, int e) {
  std::optional<ElementSet> found;
  const ElementSet base = b.with(e);
  for (std::uint64_t mask = 1; mask < (1ULL << m.n()); ++mask) {
    ElementSet s = ElementSet::from_bits(mask);
    if (!s.subset_of(base) || independent(m, s)) continue;
    bool minimal = true;
    s.for_each([&](int x) {
      if (minimal && !independent(m, s.without(x))) minimal = false;
    });
    if (!minimal) continue;
    REQUIRE_FALSE(found.has_value());  // uniqueness
    found = s;
  }
  REQUIRE(found.has_value());
  return *found;
}

inline std::vector<int> sorted_positions(const Ordering& ord, ElementSet s) {
  std::vector<int> pos;
  s.for_each([&](int e) { pos.push_back(ord.position(e)); });
  std::sort(pos.begin(), pos.end());
  return pos;
}

// Lexicographic comparison by explicit sorted position sequences.
inline bool lex_less(const Ordering& ord, ElementSet a, ElementSet b) {
  return sorted_positions(ord, a) < sorted_positions(ord, b);
}

// Least basis containing I, by scanning every basis.
inline ElementSet min_basis(const OrderedMatroid& om, ElementSet i) {
  std::optional<ElementSet> best;
  for (const ElementSet& b : om.matroid().bases()) {
    if (!i.subset_of(b)) continue;
    if (!best || lex_less(om.ordering(), b, *best)) best = b;
  }
  REQUIRE(best.has_value());
  return *best;
}

// Internally active elements via cocircuits: e in B is active iff some
// cocircuit inside (E - B) + e has e as its order-minimum.
inline ElementSet internally_active(const OrderedMatroid& om, ElementSet b,
                                    const std::vector<ElementSet>& cocircs) {
  const ElementSet outside = om.matroid().ground_set() - b;
  ElementSet out;
  b.for_each([&](int e) {
    for (const ElementSet& c : cocircs) {
      if (!c.subset_of(outside.with(e)) || !c.contains(e)) continue;
      bool is_min = true;
      c.for_each([&](int x) {
        if (om.ordering().less(x, e)) is_min = false;
      });
      if (is_min) {
        out.insert(e);
        return;
      }
    }
  });
  return out;
}

}  // namespace oracles

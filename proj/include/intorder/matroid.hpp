#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "intorder/element_set.hpp"
#include "intorder/errors.hpp"
#include "intorder/graph.hpp"
#include "intorder/rational_matrix.hpp"

namespace intorder {

/// Relabeling produced by deletion/contraction: the surviving elements are
/// renumbered 1..n' preserving their relative order. new_of_old[e] == 0 for
/// removed elements.
struct RelabelMap {
  std::vector<int> old_of_new;  // index 1..n'
  std::vector<int> new_of_old;  // index 1..n, 0 = removed

  ElementSet to_new(ElementSet old_set) const {
    ElementSet s;
    old_set.for_each([&](int e) {
      if (new_of_old[e] != 0) s.insert(new_of_old[e]);
    });
    return s;
  }
  ElementSet to_old(ElementSet new_set) const {
    ElementSet s;
    new_set.for_each([&](int e) { s.insert(old_of_new[e]); });
    return s;
  }
};

class Matroid;

/// Result of a deletion or contraction: the minor plus the relabeling.
struct MatroidMinor;

/// A finite matroid given by its full list of bases over the ground set
/// {1..n}. Values are immutable after construction and cheap to copy; all
/// derived data (independence table, circuits, pivot sets) is precomputed so
/// instances can be shared read-only across threads.
class Matroid {
 public:
  /// Validates the basis axioms exhaustively (equicardinality and the
  /// exchange property), reporting a witness pair on failure.
  static Matroid from_bases(int n, const std::vector<ElementSet>& bases);

  /// Vector matroid of the columns: bases are the full-rank column subsets,
  /// found by exact fraction-free elimination. Column j -> element j.
  static Matroid from_matrix(const RationalMatrix& m);

  /// Cycle matroid of a multigraph: bases are the maximal spanning forests.
  static Matroid from_graph(const Graph& g);

  /// Uniform matroid U_{r,n}: every r-subset is a basis.
  static Matroid uniform(int r, int n);

  int n() const;
  int rank() const;
  ElementSet ground_set() const;
  const std::vector<ElementSet>& bases() const;  // canonical order

  bool is_basis(ElementSet s) const;
  int basis_index(ElementSet s) const;  // -1 if not a basis
  bool is_independent(ElementSet s) const;
  int rank_of(ElementSet s) const;
  ElementSet closure(ElementSet s) const;

  Matroid dual() const;

  MatroidMinor deleted(ElementSet t) const;
  MatroidMinor contracted(ElementSet t) const;  // dual-delete-dual

  /// Inclusion-minimal dependent sets, canonically ordered.
  const std::vector<ElementSet>& circuits() const;
  std::vector<ElementSet> cocircuits() const;

  /// The unique circuit inside b + e (requires e not in b).
  ElementSet fundamental_circuit(ElementSet b, int e) const;
  /// The unique cocircuit inside (E - b) + f (requires f in b).
  ElementSet fundamental_cocircuit(ElementSet b, int f) const;

  ElementSet loops() const;
  ElementSet coloops() const;
  std::vector<ElementSet> parallel_classes() const;

  /// For basis index i and f in that basis: all e outside the basis with
  /// B - f + e again a basis. This is C*(B;f) - f.
  ElementSet pivots(int basis_index, int f) const;

  /// Largest supported ground set (the independence table is 2^n entries).
  static constexpr int kMaxGroundSet = 20;

 private:
  struct Core;
  explicit Matroid(std::shared_ptr<const Core> core) : core_(std::move(core)) {}
  static Matroid make(int n, std::vector<ElementSet> bases, bool validate);

  std::shared_ptr<const Core> core_;
};

struct MatroidMinor {
  Matroid matroid;
  RelabelMap relabel;
};

}  // namespace intorder

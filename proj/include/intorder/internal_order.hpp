#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "intorder/activity.hpp"

namespace intorder {

/// The internal order on the bases of an ordered matroid plus an artificial
/// top element: a graded lattice ordered by containment of the internally
/// passive sets, with height(B) = |IP(B)|.
struct InternalOrder {
  int node_count = 0;                    // number of bases; index-aligned with matroid bases
  std::vector<int> heights;              // per node
  int max_height = 0;
  std::vector<std::vector<int>> lower;   // lower covers per node
  std::vector<std::vector<int>> upper;   // upper covers per node
  std::vector<int> maximal;              // nodes covered by the artificial top
  bool has_top = true;
};

/// b1 <= b2 in the internal order, decided by IP(b1) ⊆ IP(b2).
bool leq(const OrderedMatroid& om, ElementSet b1, ElementSet b2);

/// Builds the full order; verifies gradedness and the existence of
/// meets/joins during construction (violations are hard errors).
InternalOrder build(const OrderedMatroid& om);

/// Meet: minBasis(IP(b1) ∩ IP(b2)). Always a basis.
ElementSet meet(const OrderedMatroid& om, ElementSet b1, ElementSet b2);

/// Join: minBasis(IP(b1) ∪ IP(b2)) when that union is independent,
/// otherwise the artificial top (nullopt).
std::optional<ElementSet> join(const OrderedMatroid& om, ElementSet b1, ElementSet b2);

/// Number of bases at each height; equals the h-vector up to trailing zeros.
std::vector<long long> height_profile(const InternalOrder& io);

/// The f-principal bases B0 - e + f for e in C(B0;f) - f, listed ascending
/// in the internal order (largest e first). Requires f outside B0.
std::vector<ElementSet> principal_chain(const OrderedMatroid& om, int f);

/// Lower covers of a basis node.
std::vector<ElementSet> covers_of(const InternalOrder& io, const OrderedMatroid& om, ElementSet b);

enum class LabelStyle { Sta, Raw };

/// Deterministic DOT rendering: nodes in height-then-lex order, rank-grouped
/// by height, edges are cover relations, labels in S^T_A form.
std::string to_dot(const InternalOrder& io, const OrderedMatroid& om, LabelStyle style = LabelStyle::Sta);

/// JSON export: {nodes:[{basis,S,T,A,height}], covers:[[i,j]]} with nodes in
/// the same height-then-lex order as the DOT output.
nlohmann::json to_json(const InternalOrder& io, const OrderedMatroid& om);

}  // namespace intorder

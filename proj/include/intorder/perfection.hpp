#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "intorder/activity.hpp"
#include "intorder/internal_order.hpp"

namespace intorder {

enum class BasisTag { Perfect, Abundant, Deficient };

inline const char* basis_tag_name(BasisTag t) {
  switch (t) {
    case BasisTag::Perfect: return "perfect";
    case BasisTag::Abundant: return "abundant";
    case BasisTag::Deficient: return "deficient";
  }
  return "?";
}

/// Classification of one basis by how the f-parts cover T: deficient when
/// the union misses part of T, abundant when it covers with overlap,
/// perfect when the parts partition T.
struct BasisClass {
  BasisTag tag = BasisTag::Perfect;
  ElementSet t_tilde;                                 // union of the f-parts
  std::optional<std::tuple<int, int, int>> overlap;   // (f, g, t) with t in both parts
  std::optional<int> uncovered;                       // element of T missed by every part
};

BasisClass classify_basis(const OrderedMatroid& om, ElementSet b);

/// One way of writing a basis as a join of f-principal bases: the chosen
/// principal basis per f in S.
using PrincipalDecomposition = std::vector<std::pair<int, ElementSet>>;

/// All decompositions of b as a join of f-principal bases over f in S(b).
/// Empty for deficient bases, a single entry for perfect ones, two or more
/// for abundant ones.
std::vector<PrincipalDecomposition> decompose_into_principals(const OrderedMatroid& om, ElementSet b);

enum class Strategy { AllBases, CoatomsOnly };

struct PerfectionReport {
  bool perfect = false;
  Strategy strategy = Strategy::CoatomsOnly;
  std::vector<std::pair<ElementSet, BasisClass>> classified;  // canonical order
  std::optional<ElementSet> first_counterexample;
};

/// Classifies every basis (AllBases) or only the maximal bases of the
/// internal order (CoatomsOnly; sufficient because perfection filters down).
PerfectionReport is_internally_perfect(const OrderedMatroid& om, Strategy strategy = Strategy::CoatomsOnly);

struct SearchBudget {
  std::uint64_t max_orderings = UINT64_MAX;  // capped at n! internally
  int workers = 1;
  /// Invoked periodically (from a monitor thread) with orderings tested.
  std::function<void(std::uint64_t)> on_progress;
};

struct SearchResult {
  enum class Outcome { Found, ExhaustedAll, BudgetExceeded };
  Outcome outcome = Outcome::ExhaustedAll;
  std::optional<Ordering> order;  // first perfecting order in lex permutation order
  std::uint64_t tested = 0;       // deterministic across worker counts
};

/// Scans ground-set orderings in lexicographic order of their order lists
/// for one making the matroid internally perfect. Deterministic: the
/// returned order is the lex-least one, regardless of worker count.
SearchResult find_perfect_order(const Matroid& m, const SearchBudget& budget = {});

/// X(B') for a deletion: internally passive b in B' whose only smaller
/// cocircuit companion is e. Satisfies IP_{M-e}(B') = IP_M(B') - X.
struct DeletionXSet {
  ElementSet basis;
  int deleted_element = 0;
  ElementSet x;
};

DeletionXSet deletion_x_set(const OrderedMatroid& om, ElementSet b_prime, int e);

struct CheckReport {
  std::string claim;
  enum class Status { Pass, Fail, Unmet } status = Status::Pass;
  nlohmann::json witness() const;
  std::vector<std::string> notes;  // failure/witness details
};

/// Deleting e preserves perfection when e avoids the initial basis or is a
/// (co)loop; Unmet otherwise.
CheckReport verify_deletion_corollary(const OrderedMatroid& om, int e);

/// Contracting any single element of a perfect matroid preserves perfection;
/// also replays the minimal-basis decomposition relations over every
/// independent set of the contraction.
CheckReport verify_contraction_theorem(const OrderedMatroid& om, int e);

/// Contract f1 then delete f2 (elementwise), verifying each step; requires
/// f1, f2 disjoint and every element of f2 ∩ B0 a coloop.
CheckReport verify_minor_theorem(const OrderedMatroid& om, ElementSet contract_set, ElementSet delete_set);

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const BasisClass& c);

/// Maximal bases of the internal order (no strictly larger IP set).
std::vector<int> coatom_indices(const OrderedMatroid& om);

}  // namespace intorder

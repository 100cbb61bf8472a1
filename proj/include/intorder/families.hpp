#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "intorder/activity.hpp"

namespace intorder {

/// A bundled example matroid: its name, the input document that rebuilds it,
/// and a short description of the construction.
struct CorpusEntry {
  std::string name;
  nlohmann::json document;
  std::string source;

  OrderedMatroid build() const;
};

/// Recursive graphic family: two vertices joined by a doubled edge, then for
/// each new rank a new vertex attached by edges (r, r+1) and (1, r+1). The
/// natural edge order is the perfecting order.
OrderedMatroid family_mr(int r);
nlohmann::json family_mr_document(int r);

/// Dual of the vector matroid [N' | N] where N is the oriented incidence
/// matrix of the doubled n-cycle plus diagonal edges (1,i) for i in
/// diagonals, edges ordered lexicographically, and N' contributes four
/// extra columns supported on the first two rows.
OrderedMatroid family_nnd(int n, const std::vector<int>& diagonals);
nlohmann::json family_nnd_document(int n, const std::vector<int>& diagonals);

/// The named example matroids used throughout the test corpus.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

/// Every circuit has at least rank(m) elements.
bool is_paving(const Matroid& m);

/// Some circuit spans: its closure is the whole ground set's rank.
bool has_spanning_circuit(const Matroid& m);

/// Evaluates the decidable membership tests for the known families for
/// which the h-vector conjecture holds; properties 1 and 2 (graphic or
/// transversal dual) are reported as not evaluated.
nlohmann::json interestingness_report(const Matroid& m);

}  // namespace intorder

#include "intorder/families.hpp"

#include <algorithm>

#include "intorder/document.hpp"
#include "intorder/stanley.hpp"

namespace intorder {

using nlohmann::json;

OrderedMatroid CorpusEntry::build() const { return build_document(document); }

nlohmann::json family_mr_document(int r) {
  if (r < 1) fail(Errc::unsupported, "family index must be at least 1");
  json edges = json::array();
  edges.push_back({1, 2});
  edges.push_back({1, 2});
  for (int k = 2; k <= r; ++k) {
    edges.push_back({k, k + 1});
    edges.push_back({1, k + 1});
  }
  return json{{"type", "graph"}, {"vertices", r + 1}, {"edges", edges}};
}

OrderedMatroid family_mr(int r) { return build_document(family_mr_document(r)); }

nlohmann::json family_nnd_document(int n, const std::vector<int>& diagonals) {
  if (n < 3) fail(Errc::unsupported, "the doubled-cycle family needs n >= 3");
  std::vector<int> diag = diagonals;
  std::sort(diag.begin(), diag.end());
  if (std::adjacent_find(diag.begin(), diag.end()) != diag.end())
    fail(Errc::invalid_diagonal, "duplicate diagonal");
  for (int d : diag)
    if (d < 2 || d > n) fail(Errc::invalid_diagonal, "diagonal endpoints must lie in 2..n");

  // doubled cycle edges plus diagonals (1,d), sorted lexicographically
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(i, i + 1);
  }
  edges.emplace_back(1, n);
  edges.emplace_back(1, n);
  for (int d : diag) edges.emplace_back(1, d);
  std::sort(edges.begin(), edges.end());

  // [N' | N]: four special columns, then one oriented incidence column
  // (-1 at the tail, +1 at the head) per edge
  const int cols = 4 + static_cast<int>(edges.size());
  std::vector<std::vector<long>> rows(n, std::vector<long>(cols, 0));
  rows[0][0] = 2; rows[0][1] = 1; rows[0][2] = 3; rows[0][3] = 3;
  rows[1][0] = 1; rows[1][1] = 1; rows[1][2] = 1; rows[1][3] = 1;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    rows[edges[k].first - 1][4 + k] = -1;
    rows[edges[k].second - 1][4 + k] = 1;
  }

  json jrows = json::array();
  for (const auto& r : rows) jrows.push_back(r);
  return json{{"type", "matrix"}, {"rows", jrows}, {"modifiers", json::array({{{"op", "dual"}}})}};
}

OrderedMatroid family_nnd(int n, const std::vector<int>& diagonals) {
  OrderedMatroid om = build_document(family_nnd_document(n, diagonals));
  const int expected_rank = n + static_cast<int>(diagonals.size()) + 4;
  if (om.matroid().rank() != expected_rank)
    fail(Errc::unsupported, "doubled-cycle dual has unexpected rank " +
                                std::to_string(om.matroid().rank()) + ", expected " +
                                std::to_string(expected_rank));
  return om;
}

namespace {

json matrix_doc(const std::vector<std::vector<long>>& rows, bool dualize = false) {
  json jrows = json::array();
  for (const auto& r : rows) jrows.push_back(r);
  json doc{{"type", "matrix"}, {"rows", jrows}};
  if (dualize) doc["modifiers"] = json::array({{{"op", "dual"}}});
  return doc;
}

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> out;

  const std::vector<std::vector<long>> m_fig1 = {
      {1, 0, 0, 0, 1, 0},
      {0, 1, 0, 1, -2, 1},
      {0, 0, 1, 0, 1, 1},
  };
  out.push_back({"fig1-natural", matrix_doc(m_fig1), "rank-3 matrix matroid on 6 elements, natural order"});
  {
    json doc = matrix_doc(m_fig1);
    doc["order"] = {2, 3, 1, 4, 5, 6};
    out.push_back({"fig1-reordered", doc, "the same matroid under the order 2<3<1<4<5<6"});
  }

  out.push_back({"r5n8",
                 matrix_doc({{1, 0, 0, 0, 0, -2, -1, 1},
                             {0, 1, 0, 0, 0, 1, 1, 1},
                             {0, 0, 1, 0, 0, -1, 0, 1},
                             {0, 0, 0, 1, 0, -2, 0, 1},
                             {0, 0, 0, 0, 1, 0, 0, 1}}),
                 "rank-5 matroid on 8 elements with 42 bases, natural order"});

  out.push_back({"interesting10",
                 matrix_doc({{2, 1, 3, 3, -1, -1, 0, 0, -1, -1},
                             {1, 1, 1, 1, 1, 1, 1, 1, 0, 0},
                             {0, 0, 0, 0, 0, 0, -1, -1, 1, 1}},
                            true),
                 "rank-7 dual of a rank-3 matroid on 10 elements, natural order"});

  out.push_back({"r2n8",
                 matrix_doc({{1, 1, 0, 0, 1, 1, 1, 1}, {0, 0, 1, 1, -1, -1, 1, 1}}, true),
                 "rank-6 dual of a rank-2 matroid on 8 elements, natural order"});

  out.push_back({"delminor7",
                 matrix_doc({{1, 0, 0, 0, 0, 0, 1},
                             {0, 1, 0, 0, 1, 1, 2},
                             {0, 0, 1, 0, 0, 1, 0},
                             {0, 0, 0, 1, 0, 0, -1}}),
                 "rank-4 matroid on 7 elements with a parallel pair, natural order"});

  out.push_back({"k4",
                 json{{"type", "graph"},
                      {"vertices", 4},
                      {"edges", {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}}},
                 "cycle matroid of the complete graph on 4 vertices"});

  out.push_back({"u-2-4", json{{"type", "uniform"}, {"r", 2}, {"n", 4}}, "uniform matroid U(2,4)"});
  out.push_back({"u-3-5", json{{"type", "uniform"}, {"r", 3}, {"n", 5}}, "uniform matroid U(3,5)"});

  for (int r = 1; r <= 4; ++r)
    out.push_back({"mr" + std::to_string(r), family_mr_document(r),
                   "doubled-edge graphic family member of rank " + std::to_string(r)});

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = make_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return e;
  fail(Errc::schema_error, "unknown corpus entry '" + name + "'");
}

bool is_paving(const Matroid& m) {
  for (const ElementSet& c : m.circuits())
    if (c.size() < m.rank()) return false;
  return true;
}

bool has_spanning_circuit(const Matroid& m) {
  for (const ElementSet& c : m.circuits())
    if (m.rank_of(c) == m.rank()) return true;
  return false;
}

nlohmann::json interestingness_report(const Matroid& m) {
  const Matroid dual = m.dual();
  const int n = m.n();
  const int r = m.rank();
  const std::vector<long long> h = h_vector(m);
  long long h_last = 0;
  for (long long v : h)
    if (v != 0) h_last = v;

  json props;
  props["1"] = "not-evaluated";  // dual graphic
  props["2"] = "not-evaluated";  // dual transversal
  props["3"] = static_cast<int>(dual.parallel_classes().size()) <= n - r + 2 ? "yes" : "no";
  props["4"] = (n <= 9 || dual.rank() <= 2) ? "yes" : "no";
  props["5"] = r <= 4 ? "yes" : "no";
  props["6"] = is_paving(m) ? "yes" : "no";
  // no spanning circuit rules out being a truncation; otherwise undecided here
  props["7"] = has_spanning_circuit(m) ? "not-evaluated" : "no";
  props["8"] = h_last <= 5 ? "yes" : "no";

  bool any_yes = false;
  bool all_no = true;
  for (const auto& [k, v] : props.items()) {
    if (v == "yes") any_yes = true;
    if (v != "no") all_no = false;
  }
  return json{{"n", n},
              {"rank", r},
              {"dual_parallel_classes", dual.parallel_classes().size()},
              {"h", h},
              {"properties", props},
              {"satisfies_any_evaluated", any_yes},
              {"fails_all_evaluated", !any_yes},
              {"fails_all", all_no}};
}

}  // namespace intorder

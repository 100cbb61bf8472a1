#include "intorder/commands.hpp"

#include "intorder/document.hpp"
#include "intorder/families.hpp"
#include "intorder/internal_order.hpp"
#include "intorder/stanley.hpp"

namespace intorder::cmd {

using nlohmann::json;

namespace {

json set_list(const std::vector<ElementSet>& sets) {
  json out = json::array();
  for (const ElementSet& s : sets) out.push_back(s.elements());
  return out;
}

json sta_json(const OrderedMatroid& om, ElementSet b) {
  const StaDecomposition d = om.sta_decomposition(b);
  return {{"basis", d.basis.elements()},
          {"S", d.s.elements()},
          {"T", d.t.elements()},
          {"A", d.a.elements()},
          {"label", sta_label(d, om.ordering())}};
}

}  // namespace

json bases(const json& doc) {
  Matroid m = build_matroid(doc);
  return {{"n", m.n()}, {"rank", m.rank()}, {"count", m.bases().size()}, {"bases", set_list(m.bases())}};
}

json circuits(const json& doc) {
  Matroid m = build_matroid(doc);
  return {{"circuits", set_list(m.circuits())}};
}

json cocircuits(const json& doc) {
  Matroid m = build_matroid(doc);
  return {{"cocircuits", set_list(m.cocircuits())}};
}

json hvector(const json& doc) {
  Matroid m = build_matroid(doc);
  return {{"h", h_vector(m)}};
}

std::string internal_order_dot(const json& doc) {
  OrderedMatroid om = build_document(doc);
  return to_dot(build(om), om);
}

json internal_order_json(const json& doc) {
  OrderedMatroid om = build_document(doc);
  return to_json(build(om), om);
}

json classify(const json& doc, Strategy strategy) {
  OrderedMatroid om = build_document(doc);
  PerfectionReport rep = is_internally_perfect(om, strategy);
  json counts{{"perfect", 0}, {"abundant", 0}, {"deficient", 0}};
  for (const auto& [b, c] : rep.classified) counts[basis_tag_name(c.tag)] = counts[basis_tag_name(c.tag)].get<int>() + 1;
  json out{{"perfect", rep.perfect},
           {"strategy", strategy == Strategy::AllBases ? "all-bases" : "coatoms"},
           {"classified", rep.classified.size()},
           {"counts", counts}};
  if (rep.first_counterexample) {
    out["first_counterexample"] = sta_json(om, *rep.first_counterexample);
    out["first_counterexample"]["class"] = to_json(classify_basis(om, *rep.first_counterexample));
  }
  return out;
}

std::pair<json, SearchResult::Outcome> perfect_search(const json& doc, const SearchOptions& opts) {
  Matroid m = build_matroid(doc);
  SearchBudget budget;
  budget.max_orderings = opts.budget;
  budget.workers = opts.workers;
  budget.on_progress = opts.on_progress;
  SearchResult res = find_perfect_order(m, budget);
  json out{{"found", res.outcome == SearchResult::Outcome::Found}, {"tested", res.tested}};
  if (res.order) out["order"] = res.order->to_order_list();
  if (res.outcome == SearchResult::Outcome::BudgetExceeded) out["budget_exceeded"] = true;
  return {out, res.outcome};
}

json stanley(const json& doc) {
  OrderedMatroid om = build_document(doc);
  return to_json(stanley_certificate(om));
}

json minor_check(const json& doc, const std::vector<int>& contract_set,
                 const std::vector<int>& delete_set) {
  OrderedMatroid om = build_document(doc);
  return to_json(verify_minor_theorem(om, ElementSet::from_elements(contract_set),
                                      ElementSet::from_elements(delete_set)));
}

json family(const std::string& spec_name, int r, int n, const std::vector<int>& diagonals) {
  if (spec_name == "mr") {
    json doc = family_mr_document(r);
    doc["name"] = "mr" + std::to_string(r);
    return doc;
  }
  if (spec_name == "nnd") {
    json doc = family_nnd_document(n, diagonals);
    std::string dn = "nnd-" + std::to_string(n);
    for (int d : diagonals) dn += "-" + std::to_string(d);
    doc["name"] = dn;
    return doc;
  }
  const CorpusEntry& e = corpus_entry(spec_name);
  json doc = e.document;
  doc["name"] = e.name;
  return doc;
}

json probe_del_reorder() {
  json results = json::array();
  for (const CorpusEntry& e : corpus()) {
    OrderedMatroid om = e.build();
    if (om.matroid().rank() > 4) continue;
    if (!is_internally_perfect(om).perfect) continue;
    om.initial_basis().for_each([&](int el) {
      auto del = om.matroid().deleted(ElementSet::of({el}));
      SearchResult res = find_perfect_order(del.matroid);
      json row{{"matroid", e.name},
               {"deleted", el},
               {"found", res.outcome == SearchResult::Outcome::Found},
               {"tested", res.tested}};
      if (res.order) row["order"] = res.order->to_order_list();
      results.push_back(row);
    });
  }
  return {{"probe", "del-reorder"},
          {"claim", "deleting an initial-basis element admits a perfecting reorder"},
          {"results", results}};
}

json probe_minor_closed() {
  json results = json::array();
  for (const CorpusEntry& e : corpus()) {
    OrderedMatroid om = e.build();
    if (!is_internally_perfect(om).perfect) continue;
    int cpass = 0, cfail = 0, dpass = 0, dfail = 0, dunmet = 0;
    for (int el = 1; el <= om.n(); ++el) {
      CheckReport c = verify_contraction_theorem(om, el);
      (c.status == CheckReport::Status::Pass ? cpass : cfail)++;
      CheckReport d = verify_deletion_corollary(om, el);
      if (d.status == CheckReport::Status::Pass) ++dpass;
      else if (d.status == CheckReport::Status::Unmet) ++dunmet;
      else ++dfail;
    }
    results.push_back({{"matroid", e.name},
                       {"contractions", {{"pass", cpass}, {"fail", cfail}}},
                       {"deletions", {{"pass", dpass}, {"fail", dfail}, {"unmet", dunmet}}}});
  }
  return {{"probe", "minor-closed"},
          {"claim", "single-element minors of perfect corpus matroids stay perfect"},
          {"results", results}};
}

json probe_nnd(int max_n) {
  json results = json::array();
  for (int n = 3; n <= max_n; ++n) {
    OrderedMatroid om = family_nnd(n, {});
    PerfectionReport rep = is_internally_perfect(om);
    results.push_back({{"n", n},
                       {"elements", om.n()},
                       {"rank", om.matroid().rank()},
                       {"bases", om.matroid().bases().size()},
                       {"perfect", rep.perfect}});
  }
  return {{"probe", "nnd"},
          {"claim", "doubled-cycle duals are internally perfect"},
          {"results", results}};
}

}  // namespace intorder::cmd

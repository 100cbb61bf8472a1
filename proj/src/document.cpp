#include "intorder/document.hpp"

#include <string>

namespace intorder {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { fail(Errc::schema_error, "document: " + msg); }

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("'") + key + "' must be an integer");
  return j[key].get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad(std::string(what) + " must contain only integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

nlohmann::json validate_document(const nlohmann::json& doc) {
  if (!doc.is_object()) bad("top level must be an object");
  if (!doc.contains("type") || !doc["type"].is_string()) bad("missing 'type'");
  const std::string type = doc["type"].get<std::string>();
  json out;
  out["type"] = type;

  if (type == "bases") {
    out["n"] = require_int(doc, "n");
    if (!doc.contains("bases") || !doc["bases"].is_array()) bad("'bases' must be an array");
    json bases = json::array();
    for (const auto& b : doc["bases"]) bases.push_back(int_list(b, "a basis"));
    out["bases"] = bases;
  } else if (type == "matrix") {
    if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].empty())
      bad("'rows' must be a nonempty array");
    json rows = json::array();
    std::size_t width = 0;
    for (const auto& r : doc["rows"]) {
      if (!r.is_array()) bad("matrix rows must be arrays");
      if (rows.empty()) width = r.size();
      if (r.size() != width) bad("matrix rows must have equal length");
      json row = json::array();
      for (const auto& v : r) {
        if (v.is_number_integer())
          row.push_back(std::to_string(v.get<long long>()));
        else if (v.is_string())
          row.push_back(v.get<std::string>());
        else
          bad("matrix entries must be integers or rational strings");
      }
      rows.push_back(row);
    }
    out["rows"] = rows;
  } else if (type == "graph") {
    out["vertices"] = require_int(doc, "vertices");
    if (!doc.contains("edges") || !doc["edges"].is_array()) bad("'edges' must be an array");
    json edges = json::array();
    for (const auto& e : doc["edges"]) {
      std::vector<int> uv = int_list(e, "an edge");
      if (uv.size() != 2) bad("edges must be pairs");
      edges.push_back(uv);
    }
    out["edges"] = edges;
  } else if (type == "uniform") {
    out["r"] = require_int(doc, "r");
    out["n"] = require_int(doc, "n");
  } else {
    bad("unknown type '" + type + "'");
  }

  json mods = json::array();
  if (doc.contains("modifiers")) {
    if (!doc["modifiers"].is_array()) bad("'modifiers' must be an array");
    for (const auto& m : doc["modifiers"]) {
      if (!m.is_object() || !m.contains("op") || !m["op"].is_string()) bad("modifier needs an 'op'");
      const std::string op = m["op"].get<std::string>();
      if (op == "dual") {
        mods.push_back({{"op", "dual"}});
      } else if (op == "delete" || op == "contract") {
        if (!m.contains("set")) bad("'" + op + "' modifier needs a 'set'");
        mods.push_back({{"op", op}, {"set", int_list(m["set"], "a modifier set")}});
      } else {
        bad("unknown modifier op '" + op + "'");
      }
    }
  }
  out["modifiers"] = mods;
  if (doc.contains("order")) out["order"] = int_list(doc["order"], "'order'");
  return out;
}

Matroid build_matroid(const nlohmann::json& raw) {
  const json doc = validate_document(raw);
  const std::string type = doc["type"].get<std::string>();

  Matroid m = [&] {
    if (type == "bases") {
      std::vector<ElementSet> bases;
      for (const auto& b : doc["bases"])
        bases.push_back(ElementSet::from_elements(b.get<std::vector<int>>()));
      return Matroid::from_bases(doc["n"].get<int>(), bases);
    }
    if (type == "matrix") {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : doc["rows"]) rows.push_back(r.get<std::vector<std::string>>());
      return Matroid::from_matrix(RationalMatrix::from_strings(rows));
    }
    if (type == "graph") {
      Graph g;
      g.vertex_count = doc["vertices"].get<int>();
      for (const auto& e : doc["edges"]) g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      return Matroid::from_graph(g);
    }
    return Matroid::uniform(doc["r"].get<int>(), doc["n"].get<int>());
  }();

  for (const auto& mod : doc["modifiers"]) {
    const std::string op = mod["op"].get<std::string>();
    if (op == "dual") {
      m = m.dual();
    } else {
      ElementSet s = ElementSet::from_elements(mod["set"].get<std::vector<int>>());
      if (!s.subset_of(m.ground_set()))
        fail(Errc::schema_error, "modifier set outside the current ground set");
      m = (op == "delete" ? m.deleted(s) : m.contracted(s)).matroid;
    }
  }
  return m;
}

OrderedMatroid build_document(const nlohmann::json& raw) {
  const json doc = validate_document(raw);
  Matroid m = build_matroid(raw);
  Ordering ord = doc.contains("order")
                     ? Ordering::from_order(doc["order"].get<std::vector<int>>())
                     : Ordering::identity(m.n());
  if (ord.n() != m.n())
    fail(Errc::schema_error, "'order' must be a permutation of the final ground set");
  return OrderedMatroid(std::move(m), std::move(ord));
}

}  // namespace intorder

#include "intorder/internal_order.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

namespace intorder {

bool leq(const OrderedMatroid& om, ElementSet b1, ElementSet b2) {
  const int i = om.checked_index(b1);
  const int j = om.checked_index(b2);
  return om.ip_of_index(i).subset_of(om.ip_of_index(j));
}

ElementSet meet(const OrderedMatroid& om, ElementSet b1, ElementSet b2) {
  const int i = om.checked_index(b1);
  const int j = om.checked_index(b2);
  return om.min_basis(om.ip_of_index(i) & om.ip_of_index(j));
}

std::optional<ElementSet> join(const OrderedMatroid& om, ElementSet b1, ElementSet b2) {
  const int i = om.checked_index(b1);
  const int j = om.checked_index(b2);
  const ElementSet u = om.ip_of_index(i) | om.ip_of_index(j);
  if (!om.matroid().is_independent(u)) return std::nullopt;
  return om.min_basis(u);
}

InternalOrder build(const OrderedMatroid& om) {
  const auto& bases = om.matroid().bases();
  const int nb = static_cast<int>(bases.size());

  InternalOrder io;
  io.node_count = nb;
  io.heights.resize(nb);
  io.lower.resize(nb);
  io.upper.resize(nb);

  std::vector<ElementSet> ip(nb);
  for (int i = 0; i < nb; ++i) {
    ip[i] = om.ip_of_index(i);
    io.heights[i] = ip[i].size();
    io.max_height = std::max(io.max_height, io.heights[i]);
  }

  // relation: strict containment of IP sets
  std::vector<std::vector<char>> less(nb, std::vector<char>(nb, 0));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      if (i != j && ip[i].subset_of(ip[j])) less[i][j] = 1;

  // nodes grouped by height, used for the gap check below
  std::vector<std::vector<int>> by_height(io.max_height + 1);
  for (int i = 0; i < nb; ++i) by_height[io.heights[i]].push_back(i);

  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      if (!less[i][j]) continue;
      const int hd = io.heights[j] - io.heights[i];
      if (hd == 1) {
        io.lower[j].push_back(i);
        io.upper[i].push_back(j);
      } else if (hd >= 2) {
        // gradedness: a comparable pair two or more apart needs an
        // intermediate element, otherwise some maximal chain skips a height
        bool found = false;
        for (int h = io.heights[i] + 1; h < io.heights[j] && !found; ++h)
          for (int k : by_height[h])
            if (less[i][k] && less[k][j]) {
              found = true;
              break;
            }
        if (!found)
          fail(Errc::gradedness_violated, "no intermediate between " + bases[i].to_string() + " and " +
                                              bases[j].to_string());
      } else {
        fail(Errc::gradedness_violated, "comparable bases with non-increasing height");
      }
    }

  for (int i = 0; i < nb; ++i) {
    std::sort(io.lower[i].begin(), io.lower[i].end());
    std::sort(io.upper[i].begin(), io.upper[i].end());
    bool is_max = true;
    for (int j = 0; j < nb && is_max; ++j)
      if (less[i][j]) is_max = false;
    if (is_max) io.maximal.push_back(i);
  }

  if (!io.heights.empty()) {
    int minima = 0;
    for (int i = 0; i < nb; ++i)
      if (io.heights[i] == 0) ++minima;
    if (minima != 1 || io.heights[om.initial_basis_index()] != 0)
      fail(Errc::lattice_violated, "initial basis is not the unique minimum");
  }

  // meets and joins exist for every pair (per the lattice formulas); verify
  // that the formula results are bounds
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      const ElementSet mt = om.min_basis(ip[i] & ip[j]);
      const int k = om.matroid().basis_index(mt);
      if (k < 0 || !(ip[k].subset_of(ip[i]) && ip[k].subset_of(ip[j])))
        fail(Errc::lattice_violated, "meet formula produced a non-lower-bound");
      const ElementSet u = ip[i] | ip[j];
      if (om.matroid().is_independent(u)) {
        const int l = om.matroid().basis_index(om.min_basis(u));
        if (l < 0 || !(ip[i].subset_of(ip[l]) && ip[j].subset_of(ip[l])))
          fail(Errc::lattice_violated, "join formula produced a non-upper-bound");
      }
    }

  return io;
}

std::vector<long long> height_profile(const InternalOrder& io) {
  std::vector<long long> counts(io.max_height + 1, 0);
  for (int h : io.heights) ++counts[h];
  return counts;
}

std::vector<ElementSet> principal_chain(const OrderedMatroid& om, int f) {
  if (f < 1 || f > om.n()) fail(Errc::invalid_element, "element out of range");
  const ElementSet b0 = om.initial_basis();
  if (b0.contains(f))
    fail(Errc::element_in_initial_basis, "element " + std::to_string(f) + " lies in the initial basis");
  if (om.matroid().loops().contains(f)) return {};  // C(B0;f) = {f}
  ElementSet c = om.matroid().fundamental_circuit(b0, f);
  std::vector<int> elems = (c - ElementSet::of({f})).elements();
  // removing the position-largest element gives the lowest chain member
  std::sort(elems.begin(), elems.end(), [&](int a, int b) {
    return om.ordering().position(a) > om.ordering().position(b);
  });
  std::vector<ElementSet> chain;
  chain.reserve(elems.size());
  for (int e : elems) chain.push_back(b0.without(e).with(f));
  return chain;
}

std::vector<ElementSet> covers_of(const InternalOrder& io, const OrderedMatroid& om, ElementSet b) {
  const int i = om.matroid().basis_index(b);
  if (i < 0) fail(Errc::not_a_node, b.to_string() + " is not a node of the internal order");
  std::vector<ElementSet> out;
  out.reserve(io.lower[i].size());
  for (int j : io.lower[i]) out.push_back(om.matroid().bases()[j]);
  return out;
}

namespace {

// height-then-lex emission order shared by the DOT and JSON exports
std::vector<int> emission_order(const InternalOrder& io, const OrderedMatroid& om) {
  std::vector<int> order(io.node_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (io.heights[a] != io.heights[b]) return io.heights[a] < io.heights[b];
    return om.lex_less(om.matroid().bases()[a], om.matroid().bases()[b]);
  });
  return order;
}

std::string raw_label(ElementSet b, const Ordering& order) {
  const char* sep = order.n() <= 9 ? "" : ",";
  std::vector<int> elems = b.elements();
  std::sort(elems.begin(), elems.end(),
            [&](int a, int c) { return order.position(a) < order.position(c); });
  std::string s;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(elems[i]);
  }
  return s.empty() ? "∅" : s;
}

}  // namespace

std::string to_dot(const InternalOrder& io, const OrderedMatroid& om, LabelStyle style) {
  const auto order = emission_order(io, om);
  std::vector<int> slot(io.node_count);
  for (int k = 0; k < io.node_count; ++k) slot[order[k]] = k;

  std::string out;
  out += "digraph internal_order {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box];\n";
  for (int k = 0; k < io.node_count; ++k) {
    const int i = order[k];
    std::string label = style == LabelStyle::Sta
                            ? sta_label(om.sta_of_index(i), om.ordering())
                            : raw_label(om.matroid().bases()[i], om.ordering());
    out += "  n" + std::to_string(k) + " [label=\"" + label + "\"];\n";
  }
  out += "  top [label=\"⊤\"];\n";
  for (int h = 0; h <= io.max_height; ++h) {
    std::string rank = "  { rank=same;";
    bool any = false;
    for (int k = 0; k < io.node_count; ++k)
      if (io.heights[order[k]] == h) {
        rank += " n" + std::to_string(k) + ";";
        any = true;
      }
    rank += " }\n";
    if (any) out += rank;
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < io.node_count; ++i)
    for (int j : io.upper[i]) edges.emplace_back(slot[i], slot[j]);
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges)
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  std::vector<int> tops;
  for (int i : io.maximal) tops.push_back(slot[i]);
  std::sort(tops.begin(), tops.end());
  for (int a : tops) out += "  n" + std::to_string(a) + " -> top;\n";
  out += "}\n";
  return out;
}

nlohmann::json to_json(const InternalOrder& io, const OrderedMatroid& om) {
  const auto order = emission_order(io, om);
  std::vector<int> slot(io.node_count);
  for (int k = 0; k < io.node_count; ++k) slot[order[k]] = k;

  nlohmann::json nodes = nlohmann::json::array();
  for (int k = 0; k < io.node_count; ++k) {
    const int i = order[k];
    const StaDecomposition d = om.sta_of_index(i);
    nodes.push_back({{"basis", d.basis.elements()},
                     {"S", d.s.elements()},
                     {"T", d.t.elements()},
                     {"A", d.a.elements()},
                     {"height", io.heights[i]}});
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < io.node_count; ++i)
    for (int j : io.upper[i]) edges.emplace_back(slot[i], slot[j]);
  std::sort(edges.begin(), edges.end());
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : edges) covers.push_back({a, b});
  return {{"nodes", nodes}, {"covers", covers}};
}

}  // namespace intorder

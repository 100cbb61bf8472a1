#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "intorder/activity.hpp"

namespace intorder {

/// Element of the free commutative monoid over the generators e_f for
/// f outside the initial basis. Zero coordinates are not stored.
struct MonomialVector {
  std::map<int, int> coords;

  int degree() const {
    int d = 0;
    for (const auto& [f, c] : coords) d += c;
    return d;
  }
  int at(int f) const {
    auto it = coords.find(f);
    return it == coords.end() ? 0 : it->second;
  }
  void add(int f, int c) {
    if (c != 0) coords[f] += c;
    if (coords.count(f) && coords[f] == 0) coords.erase(f);
  }
  MonomialVector minus_generator(int f) const {
    MonomialVector v = *this;
    v.add(f, -1);
    return v;
  }
  bool dominated_by(const MonomialVector& w) const {
    for (const auto& [f, c] : coords)
      if (c > w.at(f)) return false;
    return true;
  }
  friend bool operator==(const MonomialVector& a, const MonomialVector& b) { return a.coords == b.coords; }
  friend bool operator<(const MonomialVector& a, const MonomialVector& b) { return a.coords < b.coords; }
  std::string to_string() const;
};

/// h-vector of the matroid's independence complex, entries h_0..h_r,
/// computed from the f-vector by the standard transform.
std::vector<long long> h_vector(const Matroid& m);

/// mu(B) = sum over f in S(B) of |{f} ∪ T(B;f)| e_f. Requires a loopless
/// matroid; defined for every basis regardless of its class.
MonomialVector mu(const OrderedMatroid& om, ElementSet b);

struct MuImage {
  std::set<MonomialVector> vectors;
  bool injective = true;
  std::optional<std::pair<ElementSet, ElementSet>> collision;  // two bases with equal image
};

/// mu over all bases (loops stripped first when present).
MuImage mu_image(const OrderedMatroid& om);

/// Downward closure under the dominance order; the witness is the first
/// missing predecessor.
bool is_order_ideal(const std::set<MonomialVector>& s, MonomialVector* witness = nullptr);

/// All dominance-maximal elements share one coordinate sum. Throws
/// not_an_ideal when s is not an order ideal.
bool is_pure(const std::set<MonomialVector>& s);

/// Element counts by coordinate sum. Throws not_an_ideal when s is not an
/// order ideal.
std::vector<long long> o_sequence(const std::set<MonomialVector>& s);

struct StanleyCertificate {
  std::vector<long long> h;
  std::vector<long long> o;  // counts by coordinate sum of the mu image
  bool injective = false;
  bool is_ideal = false;
  bool is_pure = false;
  bool verdict = false;  // injective && ideal && pure && o == h
  std::vector<std::string> failures;
};

/// Full certification pipeline; guaranteed to pass for internally perfect
/// ordered matroids.
StanleyCertificate stanley_certificate(const OrderedMatroid& om);

nlohmann::json to_json(const StanleyCertificate& c);

}  // namespace intorder

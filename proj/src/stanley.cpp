#include "intorder/stanley.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace intorder {

std::string MonomialVector::to_string() const {
  if (coords.empty()) return "0";
  std::string s;
  for (const auto& [f, c] : coords) {
    if (!s.empty()) s += "+";
    if (c != 1) s += std::to_string(c) + "*";
    s += "e" + std::to_string(f);
  }
  return s;
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<long long> h_vector(const Matroid& m) {
  const int r = m.rank();
  // f-vector: fcount[i] = number of independent sets of cardinality i
  std::vector<long long> fcount(r + 1, 0);
  const std::uint64_t universe = 1ULL << m.n();
  for (std::uint64_t mask = 0; mask < universe; ++mask) {
    ElementSet s = ElementSet::from_bits(mask);
    if (s.size() <= r && m.is_independent(s)) ++fcount[s.size()];
  }
  std::vector<long long> h(r + 1, 0);
  for (int k = 0; k <= r; ++k)
    for (int i = 0; i <= k; ++i) {
      const long long term = binomial(r - i, k - i) * fcount[i];
      h[k] += ((k - i) % 2 == 0) ? term : -term;
    }
  return h;
}

MonomialVector mu(const OrderedMatroid& om, ElementSet b) {
  if (!om.matroid().loops().empty())
    fail(Errc::unsupported, "mu requires a loopless matroid; strip loops first");
  const StaDecomposition d = om.sta_decomposition(b);
  MonomialVector v;
  for (const auto& [f, part] : d.f_parts) v.add(f, 1 + part.size());
  return v;
}

MuImage mu_image(const OrderedMatroid& om) {
  const ElementSet loops = om.matroid().loops();
  if (!loops.empty()) return mu_image(om.deleted(loops).om);

  MuImage out;
  std::map<MonomialVector, ElementSet> seen;
  for (const ElementSet& b : om.matroid().bases()) {
    MonomialVector v = mu(om, b);
    auto [it, fresh] = seen.emplace(v, b);
    if (!fresh && out.injective) {
      out.injective = false;
      out.collision = std::make_pair(it->second, b);
    }
    out.vectors.insert(std::move(v));
  }
  return out;
}

bool is_order_ideal(const std::set<MonomialVector>& s, MonomialVector* witness) {
  for (const MonomialVector& v : s)
    for (const auto& [f, c] : v.coords) {
      MonomialVector pred = v.minus_generator(f);
      if (!s.count(pred)) {
        if (witness) *witness = pred;
        return false;
      }
    }
  return true;
}

namespace {

std::vector<MonomialVector> maximal_elements(const std::set<MonomialVector>& s) {
  std::vector<MonomialVector> out;
  for (const MonomialVector& v : s) {
    bool maximal = true;
    for (const MonomialVector& w : s)
      if (!(w == v) && v.dominated_by(w)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(v);
  }
  return out;
}

bool pure_unchecked(const std::set<MonomialVector>& s) {
  const auto maxima = maximal_elements(s);
  for (const MonomialVector& v : maxima)
    if (v.degree() != maxima.front().degree()) return false;
  return true;
}

std::vector<long long> counts_by_degree(const std::set<MonomialVector>& s) {
  int maxd = 0;
  for (const MonomialVector& v : s) maxd = std::max(maxd, v.degree());
  std::vector<long long> counts(maxd + 1, 0);
  for (const MonomialVector& v : s) ++counts[v.degree()];
  return counts;
}

std::vector<long long> strip_trailing_zeros(std::vector<long long> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

bool is_pure(const std::set<MonomialVector>& s) {
  if (!is_order_ideal(s)) fail(Errc::not_an_ideal, "set is not an order ideal");
  return pure_unchecked(s);
}

std::vector<long long> o_sequence(const std::set<MonomialVector>& s) {
  if (!is_order_ideal(s)) fail(Errc::not_an_ideal, "set is not an order ideal");
  return counts_by_degree(s);
}

StanleyCertificate stanley_certificate(const OrderedMatroid& om) {
  const ElementSet loops = om.matroid().loops();
  if (!loops.empty()) {
    // loop deletion changes neither the h-vector nor the certificate
    return stanley_certificate(om.deleted(loops).om);
  }

  StanleyCertificate cert;
  cert.h = h_vector(om.matroid());

  MuImage img = mu_image(om);
  cert.injective = img.injective;
  if (!cert.injective)
    cert.failures.push_back("mu collides on " + img.collision->first.to_string() + " and " +
                            img.collision->second.to_string());

  MonomialVector missing;
  cert.is_ideal = is_order_ideal(img.vectors, &missing);
  if (!cert.is_ideal)
    cert.failures.push_back("image is not downward closed; missing " + missing.to_string());

  cert.is_pure = pure_unchecked(img.vectors);
  if (!cert.is_pure) cert.failures.push_back("maximal image elements have unequal coordinate sums");

  cert.o = counts_by_degree(img.vectors);
  const bool counts_match = strip_trailing_zeros(cert.o) == strip_trailing_zeros(cert.h);
  if (!counts_match) cert.failures.push_back("O-sequence differs from the h-vector");

  cert.verdict = cert.injective && cert.is_ideal && cert.is_pure && counts_match;
  return cert;
}

nlohmann::json to_json(const StanleyCertificate& c) {
  return {{"h", c.h},
          {"o", c.o},
          {"injective", c.injective},
          {"is_ideal", c.is_ideal},
          {"is_pure", c.is_pure},
          {"verdict", c.verdict ? "pass" : "fail"},
          {"failures", c.failures}};
}

}  // namespace intorder

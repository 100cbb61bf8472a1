#include "intorder/activity.hpp"

#include <algorithm>
#include <string>

namespace intorder {

namespace {

// a strictly precedes b when the lowest differing position bit belongs to a
bool lower_bit_in_first(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) != 0;
}

}  // namespace

OrderedMatroid::OrderedMatroid(Matroid m, Ordering order) : m_(std::move(m)), ord_(std::move(order)) {
  const int n = m_.n();
  if (ord_.n() != n) fail(Errc::not_a_bijection, "ordering size does not match the ground set");

  posbit_.assign(n + 1, 0);
  for (int e = 1; e <= n; ++e) posbit_[e] = 1ULL << (ord_.position(e) - 1);

  const auto& bases = m_.bases();
  ip_.resize(bases.size());

  std::uint64_t best = ~0ULL;
  for (int i = 0; i < static_cast<int>(bases.size()); ++i) {
    const ElementSet b = bases[i];
    std::uint64_t pmask = position_mask(b);
    if (i == 0 || lower_bit_in_first(pmask, best)) {
      best = pmask;
      b0_index_ = i;
    }
    // f is internally passive iff some pivot candidate sits below it.
    ElementSet ip;
    b.for_each([&](int f) {
      const std::uint64_t below = posbit_[f] - 1;
      std::uint64_t cand = 0;
      m_.pivots(i, f).for_each([&](int e) { cand |= posbit_[e]; });
      if (cand & below) ip.insert(f);
    });
    ip_[i] = ip;
  }
  b0_ = bases[b0_index_];
}

bool OrderedMatroid::lex_less(ElementSet a, ElementSet b) const {
  std::uint64_t x = position_mask(a), y = position_mask(b);
  std::uint64_t d = x ^ y;
  if (d == 0) return false;
  return (x & (d & (~d + 1))) != 0;
}

int OrderedMatroid::checked_index(ElementSet b) const {
  int i = m_.basis_index(b);
  if (i < 0) fail(Errc::not_a_basis, b.to_string() + " is not a basis");
  return i;
}

ElementSet OrderedMatroid::internally_active(ElementSet b) const {
  int i = checked_index(b);
  return b - ip_[i];
}

ElementSet OrderedMatroid::internally_passive(ElementSet b) const { return ip_[checked_index(b)]; }

ElementSet OrderedMatroid::active_elements(ElementSet f_set) const {
  ElementSet out;
  for (const ElementSet& c : m_.circuits()) {
    // the position-least element of C is the only candidate for min C
    int e = 0;
    std::uint64_t bestpos = ~0ULL;
    c.for_each([&](int x) {
      if (posbit_[x] < bestpos) {
        bestpos = posbit_[x];
        e = x;
      }
    });
    if ((c - f_set).subset_of(ElementSet::of({e}))) out.insert(e);
  }
  return out;
}

ElementSet OrderedMatroid::min_basis(ElementSet independent) const {
  return m_.bases()[min_basis_index(independent)];
}

int OrderedMatroid::min_basis_index(ElementSet independent) const {
  if (!m_.is_independent(independent)) fail(Errc::dependent_input, independent.to_string() + " is dependent");
  ElementSet acc = independent;
  const int n = m_.n();
  const int r = m_.rank();
  for (int p = 1; p <= n && acc.size() < r; ++p) {
    const int e = ord_.element_at(p);
    if (acc.contains(e)) continue;
    if (m_.is_independent(acc.with(e))) acc.insert(e);
  }
  return m_.basis_index(acc);
}

StaDecomposition OrderedMatroid::sta_of_index(int i) const {
  StaDecomposition d;
  d.basis = m_.bases()[i];
  const ElementSet ip = ip_[i];
  d.s = ip - b0_;
  d.t = ip & b0_;
  d.a = d.basis - ip;
  d.s.for_each([&](int f) {
    const int j = min_basis_index(d.t.with(f));
    d.f_parts.emplace_back(f, ip_[j] & b0_);
  });
  return d;
}

StaDecomposition OrderedMatroid::sta_decomposition(ElementSet b) const {
  return sta_of_index(checked_index(b));
}

bool OrderedMatroid::is_principal(ElementSet b) const {
  return (internally_passive(b) - b0_).size() == 1;
}

bool OrderedMatroid::is_clean(ElementSet b) const {
  return (internally_passive(b) & b0_).empty();
}

OrderedMinor OrderedMatroid::deleted(ElementSet t) const {
  MatroidMinor mm = m_.deleted(t);
  Ordering induced = ord_.induced(mm.relabel.old_of_new);
  return OrderedMinor{OrderedMatroid(std::move(mm.matroid), std::move(induced)), std::move(mm.relabel)};
}

OrderedMinor OrderedMatroid::contracted(ElementSet t) const {
  MatroidMinor mm = m_.contracted(t);
  Ordering induced = ord_.induced(mm.relabel.old_of_new);
  return OrderedMinor{OrderedMatroid(std::move(mm.matroid), std::move(induced)), std::move(mm.relabel)};
}

std::string sta_label(const StaDecomposition& d, const Ordering& order) {
  const char* sep = order.n() <= 9 ? "" : ",";
  auto render = [&](ElementSet part) {
    std::vector<int> elems = part.elements();
    std::sort(elems.begin(), elems.end(),
              [&](int a, int b) { return order.position(a) < order.position(b); });
    std::string s;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(elems[i]);
    }
    return s;
  };
  std::string label = d.s.empty() ? "∅" : render(d.s);
  if (!d.t.empty()) label += "^" + render(d.t);
  if (!d.a.empty()) label += "_" + render(d.a);
  return label;
}

std::vector<long long> height_counts(const OrderedMatroid& om) {
  int maxh = 0;
  const int nb = static_cast<int>(om.matroid().bases().size());
  for (int i = 0; i < nb; ++i) maxh = std::max(maxh, om.ip_of_index(i).size());
  std::vector<long long> counts(maxh + 1, 0);
  for (int i = 0; i < nb; ++i) ++counts[om.ip_of_index(i).size()];
  return counts;
}

}  // namespace intorder

#include "intorder/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace intorder {

struct Matroid::Core {
  int n = 0;
  int rank = 0;
  std::vector<ElementSet> bases;              // canonical order
  std::unordered_map<std::uint64_t, int> index;
  std::vector<char> indep;                    // 2^n down-closure of the bases
  std::vector<ElementSet> pivot;              // [basis * (n+1) + f], f in basis
  std::vector<ElementSet> circuits;
  std::vector<ElementSet> parallel;
  ElementSet loops, coloops, ground;
};

namespace {

void validate_bases(int n, const std::vector<ElementSet>& bases) {
  if (bases.empty()) fail(Errc::empty_bases, "a matroid needs at least one basis");
  const ElementSet ground = ElementSet::full(n);
  const int r = bases[0].size();
  for (const ElementSet& b : bases) {
    if (!b.subset_of(ground))
      fail(Errc::invalid_element, "basis " + b.to_string() + " has elements outside 1.." + std::to_string(n));
    if (b.size() != r)
      fail(Errc::unequal_cardinality,
           "bases " + bases[0].to_string() + " and " + b.to_string() + " differ in cardinality");
  }
}

// Exhaustive check of the exchange axiom; reports a witness on failure.
void validate_exchange(const std::vector<ElementSet>& bases,
                       const std::unordered_map<std::uint64_t, int>& index) {
  for (const ElementSet& b1 : bases)
    for (const ElementSet& b2 : bases) {
      ElementSet only1 = b1 - b2;
      bool ok = true;
      int bad_e = 0;
      only1.for_each([&](int e) {
        if (!ok) return;
        bool found = false;
        (b2 - b1).for_each([&](int f) {
          if (found) return;
          if (index.count(b1.without(e).with(f).bits())) found = true;
        });
        if (!found) {
          ok = false;
          bad_e = e;
        }
      });
      if (!ok)
        fail(Errc::exchange_axiom_violated,
             "exchange fails for B1=" + b1.to_string() + ", B2=" + b2.to_string() + ", e=" +
                 std::to_string(bad_e));
    }
}

}  // namespace

Matroid Matroid::make(int n, std::vector<ElementSet> bases, bool validate) {
  if (n < 0 || n > kMaxGroundSet)
    fail(Errc::unsupported, "ground set size " + std::to_string(n) + " outside supported range 0.." +
                                std::to_string(kMaxGroundSet));
  if (validate) validate_bases(n, bases);
  else if (bases.empty())
    fail(Errc::empty_bases, "a matroid needs at least one basis");

  std::sort(bases.begin(), bases.end(), canonical_set_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  auto core = std::make_shared<Core>();
  core->n = n;
  core->rank = bases[0].size();
  core->ground = ElementSet::full(n);
  core->bases = std::move(bases);
  core->index.reserve(core->bases.size() * 2);
  for (int i = 0; i < static_cast<int>(core->bases.size()); ++i)
    core->index.emplace(core->bases[i].bits(), i);

  if (validate) validate_exchange(core->bases, core->index);

  // Independence table: down-closure of the basis masks.
  const std::size_t universe = 1ULL << n;
  core->indep.assign(universe, 0);
  for (const ElementSet& b : core->bases) core->indep[b.bits()] = 1;
  for (std::uint64_t m = universe; m-- > 0;) {
    if (!core->indep[m]) continue;
    for (std::uint64_t rest = m; rest; rest &= rest - 1)
      core->indep[m ^ (rest & (~rest + 1))] = 1;
  }

  // Pivot sets: for each basis B and f in B, the elements e outside B with
  // B - f + e again a basis.
  const int stride = n + 1;
  core->pivot.assign(core->bases.size() * stride, ElementSet());
  for (int i = 0; i < static_cast<int>(core->bases.size()); ++i) {
    const ElementSet b = core->bases[i];
    b.for_each([&](int f) {
      ElementSet cand;
      (core->ground - b).for_each([&](int e) {
        if (core->index.count(b.without(f).with(e).bits())) cand.insert(e);
      });
      core->pivot[static_cast<std::size_t>(i) * stride + f] = cand;
    });
  }

  // Circuits: dependent sets whose one-element-removals are all independent.
  for (std::uint64_t m = 1; m < universe; ++m) {
    if (core->indep[m]) continue;
    bool minimal = true;
    for (std::uint64_t rest = m; rest && minimal; rest &= rest - 1)
      if (!core->indep[m ^ (rest & (~rest + 1))]) minimal = false;
    if (minimal) core->circuits.push_back(ElementSet::from_bits(m));
  }
  std::sort(core->circuits.begin(), core->circuits.end(), canonical_set_less);

  for (int e = 1; e <= n; ++e)
    if (!core->indep[1ULL << (e - 1)]) core->loops.insert(e);

  ElementSet co = core->ground;
  for (const ElementSet& b : core->bases) co = co & b;
  core->coloops = co;

  // Parallel classes partition the non-loops by the two-element-circuit
  // relation (which is transitive on non-loops).
  {
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    ElementSet nonloops = core->ground - core->loops;
    nonloops.for_each([&](int e) {
      nonloops.for_each([&](int f) {
        if (f <= e) return;
        if (!core->indep[(1ULL << (e - 1)) | (1ULL << (f - 1))]) parent[find(e)] = find(f);
      });
    });
    std::vector<ElementSet> classes(n + 1);
    nonloops.for_each([&](int e) { classes[find(e)].insert(e); });
    for (const ElementSet& c : classes)
      if (!c.empty()) core->parallel.push_back(c);
    std::sort(core->parallel.begin(), core->parallel.end(), canonical_set_less);
  }

  return Matroid(std::move(core));
}

Matroid Matroid::from_bases(int n, const std::vector<ElementSet>& bases) {
  if (n < 1) fail(Errc::unsupported, "ground set must have at least one element");
  return make(n, bases, true);
}

Matroid Matroid::from_matrix(const RationalMatrix& m) {
  if (m.cols() < 1) fail(Errc::zero_matrix, "matrix has no columns");
  const int r = m.rank();
  std::vector<ElementSet> bases;
  // All r-subsets of columns, tested for full rank.
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (r == 0) {
      bases.push_back(ElementSet());
      break;
    }
    if (m.rank_of_columns(idx) == r) {
      ElementSet b;
      for (int c : idx) b.insert(c + 1);
      bases.push_back(b);
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == m.cols() - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return make(m.cols(), std::move(bases), false);
}

Matroid Matroid::from_graph(const Graph& g) {
  g.validate();
  const int m = static_cast<int>(g.edges.size());
  std::vector<int> parent(g.vertex_count + 1);

  auto component_count = [&](ElementSet edge_set, bool& acyclic) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    acyclic = true;
    int comps = g.vertex_count;
    edge_set.for_each([&](int i) {
      auto [u, v] = g.edges[i - 1];
      int ru = find(u), rv = find(v);
      if (ru == rv) {
        acyclic = false;
        return;
      }
      parent[ru] = rv;
      --comps;
    });
    return comps;
  };

  bool acyclic = false;
  const int comps = component_count(ElementSet::full(m), acyclic);
  const int forest_size = g.vertex_count - comps;

  std::vector<ElementSet> bases;
  if (forest_size == 0) {
    bases.push_back(ElementSet());
  } else {
    std::vector<int> idx(forest_size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ElementSet s;
      for (int c : idx) s.insert(c + 1);
      bool ok = false;
      component_count(s, ok);
      if (ok) bases.push_back(s);
      int i = forest_size - 1;
      while (i >= 0 && idx[i] == m - forest_size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < forest_size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return make(m, std::move(bases), false);
}

Matroid Matroid::uniform(int r, int n) {
  if (r < 0 || r > n) fail(Errc::invalid_rank, "uniform matroid needs 0 <= r <= n");
  std::vector<ElementSet> bases;
  if (r == 0) {
    bases.push_back(ElementSet());
  } else {
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
      bases.push_back(ElementSet::from_elements(idx));
      int i = r - 1;
      while (i >= 0 && idx[i] == n - r + i + 1) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return make(n, std::move(bases), false);
}

int Matroid::n() const { return core_->n; }
int Matroid::rank() const { return core_->rank; }
ElementSet Matroid::ground_set() const { return core_->ground; }
const std::vector<ElementSet>& Matroid::bases() const { return core_->bases; }

bool Matroid::is_basis(ElementSet s) const { return core_->index.count(s.bits()) != 0; }

int Matroid::basis_index(ElementSet s) const {
  auto it = core_->index.find(s.bits());
  return it == core_->index.end() ? -1 : it->second;
}

bool Matroid::is_independent(ElementSet s) const {
  if (!s.subset_of(core_->ground)) fail(Errc::invalid_element, "set not within the ground set");
  return core_->indep[s.bits()] != 0;
}

int Matroid::rank_of(ElementSet s) const {
  if (!s.subset_of(core_->ground)) fail(Errc::invalid_element, "set not within the ground set");
  int best = 0;
  for (const ElementSet& b : core_->bases) best = std::max(best, (b & s).size());
  return best;
}

ElementSet Matroid::closure(ElementSet s) const {
  const int r = rank_of(s);
  ElementSet cl = s;
  (core_->ground - s).for_each([&](int e) {
    if (rank_of(s.with(e)) == r) cl.insert(e);
  });
  return cl;
}

Matroid Matroid::dual() const {
  std::vector<ElementSet> cobases;
  cobases.reserve(core_->bases.size());
  for (const ElementSet& b : core_->bases) cobases.push_back(core_->ground - b);
  return make(core_->n, std::move(cobases), false);
}

MatroidMinor Matroid::deleted(ElementSet t) const {
  if (!t.subset_of(core_->ground)) fail(Errc::invalid_element, "deletion set not within the ground set");
  const ElementSet keep = core_->ground - t;

  RelabelMap map;
  map.new_of_old.assign(core_->n + 1, 0);
  map.old_of_new.assign(1, 0);
  keep.for_each([&](int e) {
    map.old_of_new.push_back(e);
    map.new_of_old[e] = static_cast<int>(map.old_of_new.size()) - 1;
  });

  int new_rank = 0;
  for (const ElementSet& b : core_->bases) new_rank = std::max(new_rank, (b & keep).size());

  std::vector<ElementSet> nb;
  for (const ElementSet& b : core_->bases) {
    ElementSet x = b & keep;
    if (x.size() == new_rank) nb.push_back(map.to_new(x));
  }
  return MatroidMinor{make(keep.size(), std::move(nb), false), std::move(map)};
}

MatroidMinor Matroid::contracted(ElementSet t) const {
  MatroidMinor d = dual().deleted(t);
  return MatroidMinor{d.matroid.dual(), std::move(d.relabel)};
}

const std::vector<ElementSet>& Matroid::circuits() const { return core_->circuits; }

std::vector<ElementSet> Matroid::cocircuits() const { return dual().circuits(); }

ElementSet Matroid::fundamental_circuit(ElementSet b, int e) const {
  if (!is_basis(b)) fail(Errc::not_a_basis, b.to_string() + " is not a basis");
  if (e < 1 || e > core_->n) fail(Errc::invalid_element, "element out of range");
  if (b.contains(e)) fail(Errc::element_in_basis, "element " + std::to_string(e) + " lies in the basis");
  // C(B;e) = e together with the x in B that can be pivoted out for e.
  ElementSet c = ElementSet::of({e});
  b.for_each([&](int x) {
    if (core_->index.count(b.without(x).with(e).bits())) c.insert(x);
  });
  return c;
}

ElementSet Matroid::fundamental_cocircuit(ElementSet b, int f) const {
  int i = basis_index(b);
  if (i < 0) fail(Errc::not_a_basis, b.to_string() + " is not a basis");
  if (f < 1 || f > core_->n) fail(Errc::invalid_element, "element out of range");
  if (!b.contains(f))
    fail(Errc::element_not_in_basis, "element " + std::to_string(f) + " is not in the basis");
  return pivots(i, f).with(f);
}

ElementSet Matroid::loops() const { return core_->loops; }
ElementSet Matroid::coloops() const { return core_->coloops; }
std::vector<ElementSet> Matroid::parallel_classes() const { return core_->parallel; }

ElementSet Matroid::pivots(int basis_index, int f) const {
  return core_->pivot[static_cast<std::size_t>(basis_index) * (core_->n + 1) + f];
}

}  // namespace intorder

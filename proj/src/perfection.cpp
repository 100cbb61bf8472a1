#include "intorder/perfection.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <nlohmann/json.hpp>

namespace intorder {

BasisClass classify_basis(const OrderedMatroid& om, ElementSet b) {
  const StaDecomposition d = om.sta_decomposition(b);
  BasisClass out;
  ElementSet covered;
  int total = 0;
  for (const auto& [f, part] : d.f_parts) {
    covered = covered | part;
    total += part.size();
  }
  out.t_tilde = covered;
  if (covered != d.t) {
    out.tag = BasisTag::Deficient;
    out.uncovered = (d.t - covered).min();
    return out;
  }
  if (total > d.t.size()) {
    out.tag = BasisTag::Abundant;
    for (std::size_t i = 0; i < d.f_parts.size() && !out.overlap; ++i)
      for (std::size_t j = i + 1; j < d.f_parts.size() && !out.overlap; ++j) {
        ElementSet common = d.f_parts[i].second & d.f_parts[j].second;
        if (!common.empty())
          out.overlap = std::make_tuple(d.f_parts[i].first, d.f_parts[j].first, common.min());
      }
    return out;
  }
  out.tag = BasisTag::Perfect;
  return out;
}

std::vector<PrincipalDecomposition> decompose_into_principals(const OrderedMatroid& om, ElementSet b) {
  const int idx = om.checked_index(b);
  const StaDecomposition d = om.sta_of_index(idx);
  std::vector<PrincipalDecomposition> out;
  const std::vector<int> s_elems = d.s.elements();
  if (s_elems.empty()) {
    if (b == om.initial_basis()) out.push_back({});  // empty join
    return out;
  }
  // candidates per f: the f-principal chain
  std::vector<std::vector<ElementSet>> chains;
  chains.reserve(s_elems.size());
  for (int f : s_elems) chains.push_back(principal_chain(om, f));

  PrincipalDecomposition current(s_elems.size());
  auto rec = [&](auto&& self, std::size_t k, ElementSet acc) -> void {
    if (k == s_elems.size()) {
      if (om.matroid().is_independent(acc) && om.min_basis(acc) == b) out.push_back(current);
      return;
    }
    for (const ElementSet& p : chains[k]) {
      current[k] = {s_elems[k], p};
      self(self, k + 1, acc | om.internally_passive(p));
    }
  };
  rec(rec, 0, ElementSet());
  return out;
}

std::vector<int> coatom_indices(const OrderedMatroid& om) {
  const int nb = static_cast<int>(om.matroid().bases().size());
  std::vector<int> out;
  for (int i = 0; i < nb; ++i) {
    const ElementSet ip = om.ip_of_index(i);
    bool maximal = true;
    for (int j = 0; j < nb && maximal; ++j)
      if (j != i && ip.subset_of(om.ip_of_index(j))) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

PerfectionReport is_internally_perfect(const OrderedMatroid& om, Strategy strategy) {
  PerfectionReport rep;
  rep.strategy = strategy;
  rep.perfect = true;

  std::vector<int> targets;
  if (strategy == Strategy::AllBases) {
    targets.resize(om.matroid().bases().size());
    for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = static_cast<int>(i);
  } else {
    targets = coatom_indices(om);
  }
  for (int i : targets) {
    const ElementSet b = om.matroid().bases()[i];
    BasisClass c = classify_basis(om, b);
    if (c.tag != BasisTag::Perfect && rep.perfect) {
      rep.perfect = false;
      rep.first_counterexample = b;
    }
    rep.classified.emplace_back(b, std::move(c));
  }
  return rep;
}

namespace {

// every coatom perfect <=> every basis perfect (perfection filters down)
bool all_coatoms_perfect(const OrderedMatroid& om) {
  for (int i : coatom_indices(om)) {
    if (classify_basis(om, om.matroid().bases()[i]).tag != BasisTag::Perfect) return false;
  }
  return true;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// permutation with the given lexicographic index, as an order list
std::vector<int> unrank_permutation(int n, std::uint64_t idx) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<std::uint64_t> fact(n, 1);
  for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> out;
  out.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = fact[i];
    const std::size_t d = static_cast<std::size_t>(idx / f);
    idx %= f;
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace

SearchResult find_perfect_order(const Matroid& m, const SearchBudget& budget) {
  const int n = m.n();
  if (n < 1) fail(Errc::unsupported, "ordering search needs a nonempty ground set");
  if (n > 20) fail(Errc::unsupported, "ordering search supports n <= 20");
  const std::uint64_t total = factorial(n);
  const std::uint64_t limit = std::min(budget.max_orderings, total);
  const int workers = std::max(1, std::min<int>(budget.workers, 64));

  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::atomic<std::uint64_t> tested_so_far{0};
  std::atomic<bool> done{false};

  auto scan_block = [&](std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    std::vector<int> perm = unrank_permutation(n, lo);
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) break;
      OrderedMatroid om(m, Ordering::from_order(perm));
      tested_so_far.fetch_add(1, std::memory_order_relaxed);
      if (all_coatoms_perfect(om)) {
        atomic_min(best, i);
        break;
      }
      std::next_permutation(perm.begin(), perm.end());
    }
  };

  std::thread monitor;
  if (budget.on_progress)
    monitor = std::thread([&] {
      while (!done.load()) {
        budget.on_progress(tested_so_far.load(std::memory_order_relaxed));
        std::this_thread::sleep_for(std::chrono::milliseconds(200));
      }
    });

  if (workers == 1 || limit < 2048) {
    scan_block(0, limit);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (limit + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t hi = std::min(limit, lo + chunk);
      pool.emplace_back(scan_block, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  done.store(true);
  if (monitor.joinable()) monitor.join();

  SearchResult res;
  const std::uint64_t found = best.load();
  if (found != UINT64_MAX) {
    res.outcome = SearchResult::Outcome::Found;
    res.order = Ordering::from_order(unrank_permutation(n, found));
    res.tested = found + 1;
  } else if (limit == total) {
    res.outcome = SearchResult::Outcome::ExhaustedAll;
    res.tested = total;
  } else {
    res.outcome = SearchResult::Outcome::BudgetExceeded;
    res.tested = limit;
  }
  return res;
}

DeletionXSet deletion_x_set(const OrderedMatroid& om, ElementSet b_prime, int e) {
  const int idx = om.checked_index(b_prime);
  if (e < 1 || e > om.n()) fail(Errc::invalid_element, "element out of range");
  if (b_prime.contains(e)) fail(Errc::element_in_basis, "deleted element lies in the basis");

  DeletionXSet out;
  out.basis = b_prime;
  out.deleted_element = e;
  const ElementSet ip = om.ip_of_index(idx);
  ip.for_each([&](int b) {
    // members of C*(B';b) strictly below b
    ElementSet lower;
    om.matroid().fundamental_cocircuit(b_prime, b).for_each([&](int x) {
      if (om.ordering().less(x, b)) lower.insert(x);
    });
    if (lower == ElementSet::of({e})) out.x.insert(b);
  });

  // postcondition: IP in the deletion equals IP(B') - X
  auto del = om.deleted(ElementSet::of({e}));
  const ElementSet ip_minor = del.om.internally_passive(del.relabel.to_new(b_prime));
  if (del.relabel.to_old(ip_minor) != ip - out.x)
    fail(Errc::unsupported, "internal invariant violated: X set does not explain the deletion");
  return out;
}

namespace {

// position-max element of a set, 0 when empty
int pos_max(const OrderedMatroid& om, ElementSet s) {
  int best = 0;
  s.for_each([&](int e) {
    if (best == 0 || om.ordering().less(best, e)) best = e;
  });
  return best;
}

}  // namespace

CheckReport verify_deletion_corollary(const OrderedMatroid& om, int e) {
  CheckReport rep;
  rep.claim = "deleting " + std::to_string(e) + " preserves internal perfection";
  const bool coloop = om.matroid().coloops().contains(e);
  const bool loop = om.matroid().loops().contains(e);
  if (om.initial_basis().contains(e) && !coloop && !loop) {
    rep.status = CheckReport::Status::Unmet;
    rep.notes.push_back("element lies in the initial basis and is not a coloop");
    return rep;
  }
  if (!is_internally_perfect(om).perfect) {
    rep.status = CheckReport::Status::Unmet;
    rep.notes.push_back("the matroid itself is not internally perfect");
    return rep;
  }
  auto del = om.deleted(ElementSet::of({e}));
  PerfectionReport pr = is_internally_perfect(del.om, Strategy::AllBases);
  if (pr.perfect) {
    rep.status = CheckReport::Status::Pass;
  } else {
    rep.status = CheckReport::Status::Fail;
    rep.notes.push_back("counterexample basis (minor labels): " + pr.first_counterexample->to_string());
  }
  return rep;
}

CheckReport verify_contraction_theorem(const OrderedMatroid& om, int e) {
  CheckReport rep;
  rep.claim = "contracting " + std::to_string(e) + " preserves internal perfection";
  if (!is_internally_perfect(om).perfect) {
    rep.status = CheckReport::Status::Unmet;
    rep.notes.push_back("the matroid itself is not internally perfect");
    return rep;
  }

  auto con = om.contracted(ElementSet::of({e}));
  const OrderedMatroid& nm = con.om;
  const RelabelMap& rl = con.relabel;

  PerfectionReport pr = is_internally_perfect(nm, Strategy::AllBases);
  if (!pr.perfect) {
    rep.status = CheckReport::Status::Fail;
    rep.notes.push_back("contraction not perfect; counterexample (minor labels): " +
                        pr.first_counterexample->to_string());
  }

  const bool e_is_loop = om.matroid().loops().contains(e);

  // Replay the decomposition relations between minBasis in the contraction
  // and in the parent, over every independent set of the contraction.
  const std::uint64_t universe = 1ULL << nm.n();
  for (std::uint64_t mask = 0; mask < universe; ++mask) {
    const ElementSet i_new = ElementSet::from_bits(mask);
    if (!nm.matroid().is_independent(i_new)) continue;
    const ElementSet j_old = rl.to_old(i_new);  // independent in M, J ∪ e independent unless e is a loop

    const ElementSet b_new = nm.min_basis(i_new);
    const ElementSet b_old = rl.to_old(b_new);
    const ElementSet b_prime = om.min_basis(j_old);

    ElementSet b_dprime;  // minBasis_M(J ∪ e); undefined when e is a loop
    if (!e_is_loop) {
      b_dprime = om.min_basis(j_old.with(e));
      if (b_dprime != b_old.with(e))
        rep.notes.push_back("minBasis(I∪e) != minBasis_N(I)∪e at I=" + i_new.to_string());
    }

    // relation between minBasis_N(J) and minBasis_M(J)
    if (b_prime.contains(e)) {
      if (b_new != rl.to_new(b_prime.without(e)))
        rep.notes.push_back("minBasis_N(J) != B'-e at I=" + i_new.to_string());
    } else if (!e_is_loop) {
      const ElementSet c = om.matroid().fundamental_circuit(b_prime, e);
      const int a = pos_max(om, c - j_old.with(e));
      if (a == 0 || b_new != rl.to_new(b_prime.without(a)))
        rep.notes.push_back("minBasis_N(J) != B'-a at I=" + i_new.to_string());
      else if (!om.internally_active(b_prime).contains(a))
        rep.notes.push_back("pivot element a=" + std::to_string(a) +
                            " not internally active in B' at I=" + i_new.to_string());
    }

    if (e_is_loop) continue;  // the STA tables below assume e is in some basis

    const StaDecomposition dn = nm.sta_decomposition(b_new);
    const ElementSet s_n = rl.to_old(dn.s), t_n = rl.to_old(dn.t), a_n = rl.to_old(dn.a);

    // table relating (S,T,A) of B in N to the decomposition of B'' = B ∪ e in M
    auto check_we_table = [&](const StaDecomposition& dp, const std::string& tag) {
      ElementSet es, et, ea;
      bool known = true;
      if (dp.a.contains(e)) {
        es = dp.s;
        et = dp.t;
        ea = dp.a.without(e);
      } else if (dp.t.contains(e)) {
        es = dp.s;
        et = dp.t.without(e);
        ea = dp.a;
      } else if (dp.s.contains(e)) {
        const ElementSet te = dp.part_of(e);
        if (te.empty()) {
          es = dp.s.without(e);
          et = dp.t;
          ea = dp.a;
        } else {
          const int a = pos_max(om, om.matroid().fundamental_circuit(om.initial_basis(), e).without(e));
          es = dp.s.without(e).with(a);
          et = dp.t.without(a);
          ea = dp.a;
        }
      } else {
        known = false;
      }
      if (!known)
        rep.notes.push_back(tag + ": e not in the decomposition at I=" + i_new.to_string());
      else if (s_n != es || t_n != et || a_n != ea)
        rep.notes.push_back(tag + ": decomposition mismatch at I=" + i_new.to_string());
    };

    const StaDecomposition d2 = om.sta_decomposition(b_old.with(e));
    check_we_table(d2, b_prime.contains(e) ? "case e in B'" : "case e in B''");

    if (!b_prime.contains(e)) {
      // e must be internally passive in B'' and the three-case table links
      // (S,T,A) to the decomposition of B'
      if (!om.internally_passive(b_dprime).contains(e))
        rep.notes.push_back("e not internally passive in B'' at I=" + i_new.to_string());
      const StaDecomposition d1 = om.sta_decomposition(b_prime);
      const ElementSet te = d2.part_of(e);
      const int a_prime = pos_max(om, om.matroid().fundamental_circuit(b_prime, e) - j_old.with(e));
      if (d2.s.contains(e) && te.empty()) {
        if (s_n != d1.s.without(e) || t_n != d1.t || a_n != d1.a.without(a_prime))
          rep.notes.push_back("noe table (e in S'', T_e empty) mismatch at I=" + i_new.to_string());
      } else if (d2.s.contains(e)) {
        const int a = pos_max(om, om.matroid().fundamental_circuit(om.initial_basis(), e).without(e));
        if (s_n != d1.s.with(a) || t_n != ((d1.t | te).without(a)) ||
            a_n != ((d1.a - te).without(a_prime)))
          rep.notes.push_back("noe table (e in S'', T_e nonempty) mismatch at I=" + i_new.to_string());
      } else if (d2.t.contains(e)) {
        // unique f in S'' with e in its part
        ElementSet tf;
        for (const auto& [f, part] : d2.f_parts)
          if (part.contains(e)) tf = part;
        ElementSet le;  // {t in T_f : t < e}
        tf.for_each([&](int t) {
          if (om.ordering().less(t, e)) le.insert(t);
        });
        // the basis loses the pivot element a', so A drops it as well
        if (s_n != d1.s || t_n != (d1.t | le) || a_n != ((d1.a - le).without(a_prime)))
          rep.notes.push_back("noe table (e in T'') mismatch at I=" + i_new.to_string());
      } else {
        rep.notes.push_back("e not internally passive in B'' decomposition at I=" + i_new.to_string());
      }
    }
  }

  if (!rep.notes.empty()) rep.status = CheckReport::Status::Fail;
  return rep;
}

CheckReport verify_minor_theorem(const OrderedMatroid& om, ElementSet contract_set, ElementSet delete_set) {
  CheckReport rep;
  rep.claim = "minor M/" + contract_set.to_string() + "\\" + delete_set.to_string() +
              " is internally perfect under the induced order";
  if (contract_set.intersects(delete_set)) {
    rep.status = CheckReport::Status::Unmet;
    rep.notes.push_back("contraction and deletion sets intersect");
    return rep;
  }
  const ElementSet in_b0 = delete_set & om.initial_basis();
  if (!in_b0.subset_of(om.matroid().coloops())) {
    rep.status = CheckReport::Status::Unmet;
    rep.notes.push_back("deletion set touches a non-coloop element of the initial basis");
    return rep;
  }
  if (!is_internally_perfect(om).perfect) {
    rep.status = CheckReport::Status::Unmet;
    rep.notes.push_back("the matroid itself is not internally perfect");
    return rep;
  }

  // contractions first, then deletions; labels tracked through each relabel
  OrderedMatroid cur = om;
  std::vector<int> cur_of_old(om.n() + 1);
  for (int i = 0; i <= om.n(); ++i) cur_of_old[i] = i;

  auto advance = [&](const RelabelMap& rl) {
    for (int i = 1; i <= om.n(); ++i)
      cur_of_old[i] = cur_of_old[i] == 0 ? 0 : rl.new_of_old[cur_of_old[i]];
  };

  for (int e_old : contract_set.elements()) {
    const int e = cur_of_old[e_old];
    CheckReport step = verify_contraction_theorem(cur, e);
    if (step.status != CheckReport::Status::Pass) {
      rep.status = CheckReport::Status::Fail;
      rep.notes.push_back("contraction of " + std::to_string(e_old) + " failed: " +
                          (step.notes.empty() ? step.claim : step.notes.front()));
      return rep;
    }
    auto next = cur.contracted(ElementSet::of({e}));
    advance(next.relabel);
    cur = std::move(next.om);
  }
  for (int e_old : delete_set.elements()) {
    const int e = cur_of_old[e_old];
    CheckReport step = verify_deletion_corollary(cur, e);
    if (step.status != CheckReport::Status::Pass) {
      rep.status = CheckReport::Status::Fail;
      rep.notes.push_back("deletion of " + std::to_string(e_old) + " failed: " +
                          (step.notes.empty() ? step.claim : step.notes.front()));
      return rep;
    }
    auto next = cur.deleted(ElementSet::of({e}));
    advance(next.relabel);
    cur = std::move(next.om);
  }

  PerfectionReport finalrep = is_internally_perfect(cur, Strategy::AllBases);
  if (!finalrep.perfect) {
    rep.status = CheckReport::Status::Fail;
    rep.notes.push_back("final minor not perfect; counterexample (minor labels): " +
                        finalrep.first_counterexample->to_string());
  }
  return rep;
}

nlohmann::json CheckReport::witness() const {
  nlohmann::json w = nlohmann::json::array();
  for (const std::string& s : notes) w.push_back(s);
  return w;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j{{"claim", r.claim},
                   {"status", r.status == CheckReport::Status::Pass   ? "pass"
                              : r.status == CheckReport::Status::Fail ? "fail"
                                                                      : "unmet"}};
  if (!r.notes.empty()) j["witness"] = r.witness();
  return j;
}

nlohmann::json to_json(const BasisClass& c) {
  nlohmann::json j{{"class", basis_tag_name(c.tag)}, {"t_tilde", c.t_tilde.elements()}};
  if (c.overlap) {
    auto [f, g, t] = *c.overlap;
    j["overlap"] = {{"f", f}, {"g", g}, {"t", t}};
  }
  if (c.uncovered) j["uncovered"] = *c.uncovered;
  return j;
}

}  // namespace intorder

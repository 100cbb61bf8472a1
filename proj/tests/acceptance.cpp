// Acceptance suite: one pass/fail line per criterion, timed against the
// stated runtime caps. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "intorder/families.hpp"
#include "intorder/internal_order.hpp"
#include "intorder/perfection.hpp"
#include "intorder/stanley.hpp"

using namespace intorder;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

void expect(bool ok, const std::string& what) {
  if (!ok) note("FAILED: " + what);
}

void run_criterion(int number, const std::string& title, double limit_seconds,
                   const std::function<void()>& body) {
  notes.clear();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > limit_seconds) note("runtime " + std::to_string(dt) + "s exceeds " + std::to_string(limit_seconds) + "s");
  const bool ok = notes.empty();
  if (!ok) ++failures;
  std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, title.c_str(), dt);
  for (const std::string& s : notes) std::printf("         %s\n", s.c_str());
  std::fflush(stdout);
}

ElementSet es(std::initializer_list<int> l) { return ElementSet::of(l); }

template <typename T>
std::string vec_str(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

bool eq(const std::vector<long long>& a, const std::vector<long long>& b) { return a == b; }

std::vector<long long> padded(std::vector<long long> v, std::size_t len) {
  v.resize(len, 0);
  return v;
}

std::vector<long long> stripped(std::vector<long long> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

std::vector<std::string> perfect_corpus_names() {
  std::vector<std::string> out;
  for (const CorpusEntry& e : corpus())
    if (is_internally_perfect(e.build()).perfect) out.push_back(e.name);
  return out;
}

}  // namespace

int main() {
  // 1. h-vector goldens, exact equality
  run_criterion(1, "h-vector goldens", 5.0, [] {
    const std::vector<std::pair<const char*, std::vector<long long>>> goldens = {
        {"fig1-natural", {1, 3, 5, 5}},
        {"r5n8", {1, 3, 6, 9, 12, 11}},
        {"interesting10", {1, 3, 6, 10, 13, 15, 14, 6}},
        {"r2n8", {1, 2, 3, 4, 5, 6, 3}},
    };
    for (const auto& [name, h] : goldens) {
      const std::vector<long long> got = h_vector(corpus_entry(name).build().matroid());
      expect(eq(got, h), std::string(name) + " h-vector " + vec_str(got) + " != " + vec_str(h));
    }
    expect(corpus_entry("r5n8").build().matroid().bases().size() == 42, "r5n8 basis count != 42");
  });

  // 2. internal-order structure for both figure-1 orders
  run_criterion(2, "internal-order structure and non-isomorphism witness", 1.0, [] {
    OrderedMatroid nat = corpus_entry("fig1-natural").build();
    OrderedMatroid re = corpus_entry("fig1-reordered").build();
    InternalOrder io_nat = build(nat);  // build() verifies graded lattice structure
    InternalOrder io_re = build(re);
    expect(eq(height_profile(io_nat), {1, 3, 5, 5}), "natural profile mismatch");
    expect(eq(height_profile(io_re), {1, 3, 5, 5}), "reordered profile mismatch");

    auto single_cover_tops = [](const InternalOrder& io) {
      int c = 0;
      for (int i = 0; i < io.node_count; ++i)
        if (io.heights[i] == 3 && io.lower[i].size() == 1) ++c;
      return c;
    };
    expect(single_cover_tops(io_nat) == 2, "natural order: height-3 single-cover count != 2");
    expect(single_cover_tops(io_re) == 1, "reordered: height-3 single-cover count != 1");
  });

  // 3. principal chain lengths for f = 5, 6, 4
  run_criterion(3, "principal chain lengths 2, 1, 0", 1.0, [] {
    OrderedMatroid nat = corpus_entry("fig1-natural").build();
    expect(principal_chain(nat, 5).size() == 3, "5-principal chain should have 3 bases (length 2)");
    expect(principal_chain(nat, 6).size() == 2, "6-principal chain should have 2 bases (length 1)");
    expect(principal_chain(nat, 4).size() == 1, "4-principal chain should have 1 basis (length 0)");
  });

  // 4. classification goldens
  run_criterion(4, "classification goldens", 10.0, [] {
    OrderedMatroid r5n8 = corpus_entry("r5n8").build();
    expect(classify_basis(r5n8, es({1, 3, 5, 6, 8})).tag == BasisTag::Deficient,
           "57^24 (elements {1,3,5,6,8}) not deficient");
    expect(classify_basis(r5n8, es({1, 4, 5, 6, 8})).tag == BasisTag::Abundant,
           "57^34 (elements {1,4,5,6,8}) not abundant");
    expect(decompose_into_principals(r5n8, es({1, 4, 5, 6, 8})).size() == 3,
           "57^34 should have 3 principal decompositions");
    expect(covers_of(build(r5n8), r5n8, es({1, 4, 5, 6, 8})).size() == 3,
           "57^34 should cover 3 bases");

    expect(!is_internally_perfect(corpus_entry("fig1-natural").build()).perfect,
           "fig1-natural should not be perfect");
    expect(is_internally_perfect(corpus_entry("fig1-reordered").build()).perfect,
           "fig1-reordered should be perfect");

    OrderedMatroid i10 = corpus_entry("interesting10").build();
    expect(is_internally_perfect(i10).perfect, "interesting10 should be perfect");
    const auto coats = coatom_indices(i10);
    expect(coats.size() == 6, "interesting10 should have 6 maximal bases");
    // the six published partitions, in 1-based labels
    const std::set<std::string> golden_partitions = {
        "4:23|8:67|10:", "4:23|8:|10:69", "4:|8:2567|10:",
        "4:|8:|10:2569", "4:3|8:567|10:", "4:3|8:|10:569",
    };
    std::set<std::string> got;
    for (int idx : coats) {
      StaDecomposition d = i10.sta_of_index(idx);
      if (!(d.s == es({4, 8, 10})) || !d.a.empty()) {
        note("maximal basis with unexpected S or A: " + d.basis.to_string());
        continue;
      }
      std::string key;
      for (const auto& [f, part] : d.f_parts) {
        if (!key.empty()) key += "|";
        key += std::to_string(f) + ":";
        part.for_each([&](int t) { key += std::to_string(t); });
      }
      got.insert(key);
    }
    expect(got == golden_partitions, "maximal-basis partitions differ from the published six");
  });

  // 5. ordering-search negatives, deterministic across worker counts
  run_criterion(5, "no perfecting order among all 40320 for r5n8 and r2n8", 1200.0, [] {
    for (const char* name : {"r5n8", "r2n8"}) {
      Matroid m = corpus_entry(name).build().matroid();
      for (int workers : {1, 4}) {
        SearchBudget b;
        b.workers = workers;
        SearchResult res = find_perfect_order(m, b);
        expect(res.outcome == SearchResult::Outcome::ExhaustedAll,
               std::string(name) + " search did not exhaust");
        expect(res.tested == 40320,
               std::string(name) + " tested " + std::to_string(res.tested) + " != 40320");
      }
    }
  });

  // 6. minor theorems as exhaustive checks
  run_criterion(6, "minor theorems across the perfect corpus", 30.0, [] {
    for (const char* name : {"fig1-reordered", "interesting10", "mr2", "mr3", "mr4"}) {
      OrderedMatroid om = corpus_entry(name).build();
      for (int e = 1; e <= om.n(); ++e) {
        if (verify_contraction_theorem(om, e).status != CheckReport::Status::Pass)
          note(std::string(name) + ": contraction of " + std::to_string(e) + " failed");
      }
      (om.matroid().ground_set() - om.initial_basis()).for_each([&](int e) {
        if (verify_deletion_corollary(om, e).status != CheckReport::Status::Pass)
          note(std::string(name) + ": deletion of " + std::to_string(e) + " failed");
      });
    }

    OrderedMatroid dm7 = corpus_entry("delminor7").build();
    expect(verify_deletion_corollary(dm7, 2).status == CheckReport::Status::Unmet,
           "deleting 2 should be outside the corollary's scope");
    OrderedMinor del2 = dm7.deleted(es({2}));
    expect(!is_internally_perfect(del2.om, Strategy::AllBases).perfect,
           "deleting 2 with the induced order should break perfection");
    expect(verify_deletion_corollary(dm7, 5).status == CheckReport::Status::Pass,
           "deleting 5 should preserve perfection");
    OrderedMatroid reordered(del2.om.matroid(), Ordering::from_order({1, 4, 2, 3, 5, 6}));
    expect(is_internally_perfect(reordered, Strategy::AllBases).perfect,
           "the parallel-element reorder should restore perfection");
  });

  // 7. Stanley certificates for every internally perfect corpus ordering
  run_criterion(7, "pure order-ideal certificates for the perfect corpus", 10.0, [] {
    for (const std::string& name : perfect_corpus_names()) {
      OrderedMatroid om = corpus_entry(name).build();
      StanleyCertificate cert = stanley_certificate(om);
      expect(cert.verdict, name + ": certificate failed");
      expect(cert.injective && cert.is_ideal && cert.is_pure, name + ": component flags not all set");
      expect(stripped(cert.o) == stripped(cert.h), name + ": O-sequence differs from h-vector");

      // order isomorphism in the covering direction
      OrderedMatroid base = om.matroid().loops().empty() ? om : om.deleted(om.matroid().loops()).om;
      InternalOrder io = build(base);
      const auto& bases = base.matroid().bases();
      for (std::size_t i = 0; i < bases.size(); ++i) {
        const MonomialVector v = mu(base, bases[i]);
        StaDecomposition d = base.sta_of_index(static_cast<int>(i));
        std::set<MonomialVector> want;
        d.s.for_each([&](int f) { want.insert(v.minus_generator(f)); });
        std::set<MonomialVector> got;
        for (int j : io.lower[i]) got.insert(mu(base, bases[j]));
        if (got != want) note(name + ": covers of " + bases[i].to_string() + " do not match mu steps");
      }
    }
  });

  // 8. property suites
  run_criterion(8, "property suites", 300.0, [] {
    std::mt19937 rng(2024);

    for (const CorpusEntry& entry : corpus()) {
      OrderedMatroid om = entry.build();
      const auto& bases = om.matroid().bases();
      const int nb = static_cast<int>(bases.size());

      // four-way equivalence of the order characterizations; the pivot
      // closure leg runs on the members with at most 50 bases
      std::vector<std::vector<char>> reach;
      if (nb <= 50) {
        reach.assign(nb, std::vector<char>(nb, 0));
        for (int start = 0; start < nb; ++start) {
          std::vector<int> queue{start};
          reach[start][start] = 1;
          while (!queue.empty()) {
            const ElementSet cur = bases[queue.back()];
            queue.pop_back();
            cur.for_each([&](int out) {
              (om.matroid().ground_set() - cur).for_each([&](int in) {
                const int j = om.matroid().basis_index(cur.without(out).with(in));
                if (j < 0 || reach[start][j]) return;
                if (om.internally_active(bases[j]).contains(in)) {
                  reach[start][j] = 1;
                  queue.push_back(j);
                }
              });
            });
          }
        }
      }
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
          const bool iii = om.ip_of_index(i).subset_of(om.ip_of_index(j));
          const bool ii = om.ip_of_index(i).subset_of(bases[j]);
          const bool iv = om.min_basis(bases[i] & bases[j]) == bases[i];
          if (iii != ii || iii != iv) note(entry.name + ": characterizations disagree");
          if (nb <= 50 && iii != static_cast<bool>(reach[j][i]))
            note(entry.name + ": pivot closure disagrees with IP containment");
        }

      // pivoting triple equivalence
      for (const ElementSet& b : bases)
        b.for_each([&](int x) {
          (om.matroid().ground_set() - b).for_each([&](int y) {
            const ElementSet swapped = b.without(x).with(y);
            const bool is_basis = om.matroid().is_basis(swapped);
            const bool in_circ = om.matroid().fundamental_circuit(b, y).contains(x);
            if (is_basis != in_circ) note(entry.name + ": pivoting equivalence fails");
            if (is_basis && !om.matroid().fundamental_cocircuit(swapped, y).contains(x))
              note(entry.name + ": cocircuit direction of pivoting fails");
          });
        });

      // graded lattice structure, heights, IA within B0, height bound
      InternalOrder io = build(om);
      const int expected_max = om.matroid().rank() - om.matroid().coloops().size();
      if (io.max_height != expected_max) note(entry.name + ": max height != rank - coloops");
      for (int i = 0; i < nb; ++i) {
        if (io.heights[i] != om.ip_of_index(i).size()) note(entry.name + ": height != |IP|");
        for (int j : io.lower[i])
          if (io.heights[j] + 1 != io.heights[i]) note(entry.name + ": cover skips a height");
        if (!om.internally_active(bases[i]).subset_of(om.initial_basis()))
          note(entry.name + ": IA outside the initial basis");
      }

      // lattice axioms on the small members
      if (nb <= 50) {
        for (int i = 0; i < nb; ++i)
          for (int j = 0; j < nb; ++j) {
            const ElementSet mt = meet(om, bases[i], bases[j]);
            if (!(leq(om, mt, bases[i]) && leq(om, mt, bases[j])))
              note(entry.name + ": meet is not a lower bound");
            const auto jn = join(om, bases[i], bases[j]);
            if (jn && !(leq(om, bases[i], *jn) && leq(om, bases[j], *jn)))
              note(entry.name + ": join is not an upper bound");
          }
      }

      // filter-down and exact cover counts for perfect bases
      for (int i = 0; i < nb; ++i) {
        const BasisClass c = classify_basis(om, bases[i]);
        if (c.tag == BasisTag::Perfect) {
          for (int j = 0; j < nb; ++j)
            if (om.ip_of_index(j).subset_of(om.ip_of_index(i)) &&
                classify_basis(om, bases[j]).tag != BasisTag::Perfect)
              note(entry.name + ": perfection does not filter down");
          const int s_size = (om.ip_of_index(i) - om.initial_basis()).size();
          if (static_cast<int>(io.lower[i].size()) != s_size)
            note(entry.name + ": perfect basis covers != |S|");
        }
        if (io.lower[i].size() > static_cast<std::size_t>(om.ip_of_index(i).size()))
          note(entry.name + ": basis covers more than |IP|");
      }

      // h-vector is ordering-invariant
      const std::vector<long long> h = h_vector(om.matroid());
      std::vector<int> elems(om.n());
      for (int i = 0; i < om.n(); ++i) elems[i] = i + 1;
      for (int k = 0; k < 20; ++k) {
        std::shuffle(elems.begin(), elems.end(), rng);
        OrderedMatroid shuffled(om.matroid(), Ordering::from_order(elems));
        if (padded(height_counts(shuffled), h.size()) != h)
          note(entry.name + ": height profile depends on the ordering");
      }
    }

    // uniform-matroid perfection criterion
    for (int r = 2; r <= 4; ++r)
      for (int n = r + 1; n <= 7; ++n) {
        const bool expected = (r == 2) || (n == r + 1);
        OrderedMatroid om(Matroid::uniform(r, n), Ordering::identity(n));
        if (is_internally_perfect(om).perfect != expected)
          note("uniform(" + std::to_string(r) + "," + std::to_string(n) + ") criterion mismatch");
      }
  });

  // 9. conjecture probes: reported, never gating
  run_criterion(9, "conjecture probes (reports only)", 600.0, [] {
    for (int n = 3; n <= 5; ++n) {
      OrderedMatroid om = family_nnd(n, {});
      std::printf("         probe nnd n=%d: %d elements, %zu bases, perfect=%s\n", n, om.n(),
                  om.matroid().bases().size(),
                  is_internally_perfect(om).perfect ? "yes" : "no");
    }
    for (const std::string& name : perfect_corpus_names()) {
      OrderedMatroid om = corpus_entry(name).build();
      if (om.matroid().rank() > 4) continue;
      om.initial_basis().for_each([&](int e) {
        Matroid minor = om.matroid().deleted(ElementSet::of({e})).matroid;
        SearchResult res = find_perfect_order(minor);
        std::printf("         probe del-reorder %s - %d: %s after %llu orderings\n", name.c_str(), e,
                    res.outcome == SearchResult::Outcome::Found ? "reorderable" : "none",
                    static_cast<unsigned long long>(res.tested));
      });
    }
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "intorder/families.hpp"
#include "intorder/perfection.hpp"
#include "intorder/stanley.hpp"
#include "oracles.hpp"

using namespace intorder;
namespace {

ElementSet es(std::initializer_list<int> l) { return ElementSet::of(l); }

}  // namespace

TEST_CASE("recursive graphic family") {
  OrderedMatroid m1 = family_mr(1);
  CHECK(m1.n() == 2);
  CHECK(m1.matroid().bases().size() == 2);

  OrderedMatroid m2 = family_mr(2);
  CHECK(m2.n() == 4);
  CHECK(m2.matroid().bases().size() == 5);

  OrderedMatroid m4 = family_mr(4);
  CHECK(m4.n() == 8);
  CHECK(m4.matroid().bases().size() == 34);
  CHECK(height_counts(m4) == std::vector<long long>{1, 4, 9, 12, 8});

  for (int r = 1; r <= 5; ++r) {
    INFO("rank ", r);
    CHECK(is_internally_perfect(family_mr(r)).perfect);
  }

  CHECK_THROWS_AS((void)family_mr(0), Error);
}

TEST_CASE("family member bases take exactly one of three forms") {
  for (int r = 2; r <= 5; ++r) {
    Matroid prev = family_mr(r - 1).matroid();
    Matroid cur = family_mr(r).matroid();
    const int e = 2 * r - 1, f = 2 * r;
    for (const ElementSet& b : cur.bases()) {
      int forms = 0;
      if (b.contains(e) && !b.contains(f) && prev.is_basis(b.without(e))) ++forms;
      if (b.contains(f) && !b.contains(e) && prev.is_basis(b.without(f))) ++forms;
      if (b.contains(e) && b.contains(f) && !b.contains(e - 1) &&
          prev.is_basis(b.without(e).without(f).with(e - 1)))
        ++forms;
      CHECK(forms == 1);
    }
  }
}

TEST_CASE("doubled-cycle dual family") {
  OrderedMatroid n3 = family_nnd(3, {});
  CHECK(n3.n() == 10);
  CHECK(n3.matroid().rank() == 7);
  CHECK(is_internally_perfect(n3).perfect);

  // the generator reproduces the bundled ten-element matroid bit-exactly
  OrderedMatroid i10 = corpus_entry("interesting10").build();
  CHECK(n3.matroid().bases() == i10.matroid().bases());

  for (int n = 4; n <= 5; ++n) {
    OrderedMatroid om = family_nnd(n, {});
    CHECK(om.n() == 2 * n + 4);
    CHECK(om.matroid().rank() == n + 4);
    CHECK(is_internally_perfect(om).perfect);
  }

  // diagonals enlarge the ground set and the rank accordingly
  OrderedMatroid d1 = family_nnd(4, {3});
  CHECK(d1.n() == 13);
  CHECK(d1.matroid().rank() == 9);

  CHECK_THROWS_AS((void)family_nnd(2, {}), Error);
  CHECK_THROWS_AS((void)family_nnd(4, {1}), Error);
  CHECK_THROWS_AS((void)family_nnd(4, {5}), Error);
  CHECK_THROWS_AS((void)family_nnd(4, {3, 3}), Error);
}

TEST_CASE("corpus integrity") {
  const auto& entries = corpus();
  CHECK(entries.size() == 13);

  std::set<std::string> names;
  for (const CorpusEntry& e : entries) names.insert(e.name);
  CHECK(names.size() == 13);
  for (const char* required : {"fig1-natural", "fig1-reordered", "r5n8", "interesting10", "r2n8",
                               "delminor7", "k4", "u-2-4", "u-3-5", "mr1", "mr2", "mr3", "mr4"})
    CHECK(names.count(required) == 1);

  // deterministic regeneration
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(corpus()[i].document == entries[i].document);
    OrderedMatroid a = entries[i].build();
    OrderedMatroid b = entries[i].build();
    CHECK(a.matroid().bases() == b.matroid().bases());
    CHECK(a.ordering().to_order_list() == b.ordering().to_order_list());
  }

  OrderedMatroid dm7 = corpus_entry("delminor7").build();
  CHECK(dm7.n() == 7);
  CHECK(dm7.matroid().rank() == 4);
  CHECK(dm7.initial_basis() == es({1, 2, 3, 4}));

  CHECK_THROWS_AS((void)corpus_entry("nope"), Error);
}

TEST_CASE("ten-element dual circuits are printed bit-exactly") {
  Matroid i10 = corpus_entry("interesting10").build().matroid();
  const std::vector<ElementSet> expected = {
      es({1, 2, 3, 4}),
      es({7, 8, 9, 10}),
      es({1, 2, 5, 6, 7, 8}),
      es({1, 2, 5, 6, 9, 10}),
      es({1, 3, 4, 5, 6, 7, 8}),
      es({1, 3, 4, 5, 6, 9, 10}),
      es({2, 3, 4, 5, 6, 7, 8}),
      es({2, 3, 4, 5, 6, 9, 10}),
  };
  CHECK(i10.circuits() == expected);
}

TEST_CASE("paving and spanning circuits") {
  CHECK(is_paving(corpus_entry("k4").build().matroid()));
  CHECK_FALSE(is_paving(corpus_entry("interesting10").build().matroid()));
  CHECK(is_paving(Matroid::uniform(2, 4)));

  CHECK_FALSE(has_spanning_circuit(corpus_entry("interesting10").build().matroid()));
  CHECK(has_spanning_circuit(Matroid::uniform(3, 4)));
  CHECK_FALSE(has_spanning_circuit(Matroid::uniform(3, 3)));
}

TEST_CASE("interestingness reports") {
  auto props_of = [](const char* name) {
    return interestingness_report(corpus_entry(name).build().matroid())["properties"];
  };

  // the ten-element dual fails every evaluated membership test
  auto i10 = props_of("interesting10");
  for (const char* k : {"3", "4", "5", "6", "7", "8"}) CHECK(i10[k] == "no");
  CHECK(i10["1"] == "not-evaluated");
  CHECK(i10["2"] == "not-evaluated");
  CHECK(interestingness_report(corpus_entry("interesting10").build().matroid())["fails_all_evaluated"] ==
        true);

  // K4: small, low rank, paving
  auto k4 = props_of("k4");
  CHECK(k4["4"] == "yes");
  CHECK(k4["5"] == "yes");
  CHECK(k4["6"] == "yes");

  // the rank-6 dual of the rank-2 matroid on 8 elements: properties 3, 4, 8
  // (it is also paving: its circuits are the four 6-element complements of
  // the parallel classes)
  auto r2n8 = props_of("r2n8");
  CHECK(r2n8["3"] == "yes");
  CHECK(r2n8["4"] == "yes");
  CHECK(r2n8["8"] == "yes");
  CHECK(r2n8["5"] == "no");
  CHECK(r2n8["6"] == "yes");
}

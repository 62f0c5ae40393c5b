#include <doctest.h>

#include "aoposet/constructions.hpp"
#include "aoposet/errors.hpp"
#include "aoposet/poset.hpp"
#include "helpers.hpp"

using namespace aoposet;

TEST_CASE("chain and antichain basics") {
  const auto c = Poset::chain(5);
  CHECK(c.size() == 5);
  CHECK(height(c) == 5);
  CHECK(width(c) == 1);
  CHECK(cover_pairs(c).size() == 4);
  CHECK(c.less(0, 4));
  CHECK_FALSE(c.less(4, 0));

  const auto a = Poset::antichain(4);
  CHECK(height(a) == 1);
  CHECK(width(a) == 4);
  CHECK(comparability_graph(a).edge_count() == 0);

  const auto e = Poset::antichain(0);
  CHECK(height(e) == 0);
  CHECK(width(e) == 0);
  CHECK(is_connected(e));
}

TEST_CASE("boolean lattice B_3") {
  const auto b3 = constructions::boolean_lattice(3);
  CHECK(b3.size() == 8);
  CHECK(height(b3) == 4);
  CHECK(width(b3) == 3);
  CHECK(cover_pairs(b3).size() == 12);
  CHECK(comparability_graph(b3).edge_count() == 19);
  // B_2 is the diamond: four covers.
  CHECK(cover_pairs(constructions::boolean_lattice(2)).size() == 4);
}

TEST_CASE("closure accepts arbitrary order pairs") {
  // 3 > 0 given directly and via 3 > 1 > 0: covers drop the long pair.
  const auto p = testing::from_pairs(4, {{3, 0}, {1, 0}, {3, 1}, {2, 1}, {3, 0}});
  CHECK(p.less(0, 3));
  CHECK(p.less(0, 2));
  const auto covers = cover_pairs(p);
  CHECK(covers.size() == 3);
  for (auto c : covers) CHECK_FALSE((c.upper == 3 && c.lower == 0));
}

TEST_CASE("loader errors") {
  CHECK_THROWS_AS(testing::from_pairs(2, {{1, 0}, {0, 1}}), CycleError);
  CHECK_THROWS_AS(testing::from_pairs(3, {{1, 0}, {2, 1}, {0, 2}}), CycleError);
  CHECK_THROWS_AS(testing::from_pairs(2, {{1, 1}}), CycleError);
  CHECK_THROWS_AS(testing::from_pairs(2, {{2, 0}}), std::out_of_range);

  CHECK_THROWS_AS(Poset::from_relation({{false, true}, {true, false}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset::from_relation({{true}}), std::invalid_argument);
  // 0 < 1 < 2 without 0 < 2 is not transitive.
  CHECK_THROWS_AS(Poset::from_relation({{false, true, false}, {false, false, true}, {false, false, false}}),
                  std::invalid_argument);
  const auto ok = Poset::from_relation({{false, true, true}, {false, false, true}, {false, false, false}});
  CHECK(ok == Poset::chain(3));
}

TEST_CASE("levels, minima and maxima") {
  const auto d = testing::diamond();
  CHECK(levels(d) == std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(minimal_elements(d) == std::vector<Element>{0});
  CHECK(maximal_elements(d) == std::vector<Element>{3});
}

TEST_CASE("invert, union, induced subposet") {
  const auto v = testing::v_poset();
  const auto inv = invert(v);
  CHECK(inv.less(1, 0));
  CHECK(inv.less(2, 0));
  CHECK(invert(inv) == v);

  const auto u = disjoint_union(v, Poset::chain(2));
  CHECK(u.size() == 5);
  CHECK(u.less(3, 4));
  CHECK_FALSE(u.comparable(0, 3));
  CHECK_FALSE(is_connected(u));
  CHECK(is_connected(v));

  const std::vector<Element> keep{2, 0};
  const auto sub = induced_subposet(v, keep);
  CHECK(sub.size() == 2);
  CHECK(sub.less(1, 0));
}

TEST_CASE("width equals the independence number of the comparability graph") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 14;
    const auto p = testing::random_poset(n, 0.1 + 0.05 * (i % 12), rng);
    const auto g = comparability_graph(p);
    CHECK(width(p) == independence_number_brute(g));
    CHECK(height(p) == clique_number_brute(g));
  }
}

TEST_CASE("relabel preserves invariants") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto p = testing::random_poset(9, 0.3, rng);
    const auto perm = testing::shuffled(9, rng);
    const auto q = relabel(p, perm);
    CHECK(height(q) == height(p));
    CHECK(width(q) == width(p));
    CHECK(cover_pairs(q).size() == cover_pairs(p).size());
    for (Element a = 0; a < 9; ++a)
      for (Element b = 0; b < 9; ++b) CHECK(q.less(perm[a], perm[b]) == p.less(a, b));
  }
  CHECK_THROWS_AS(relabel(Poset::chain(2), std::vector<std::size_t>{0, 0}), std::invalid_argument);
}

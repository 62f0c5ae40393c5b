#include <doctest.h>

#include "aoposet/constructions.hpp"
#include "aoposet/enumeration.hpp"
#include "aoposet/structure.hpp"
#include "helpers.hpp"

using namespace aoposet;

TEST_CASE("V shape") {
  const auto w = find_v_shape(testing::v_poset());
  REQUIRE(w);
  CHECK(w->kind == ShapeKind::V);
  CHECK(w->elements == std::vector<Element>{0, 1, 2});
  CHECK(witness_holds(testing::v_poset(), *w));
  CHECK(is_v_free(invert(testing::v_poset())));
  CHECK(is_v_free(Poset::chain(4)));
}

TEST_CASE("N shape") {
  const auto p = testing::n_poset();
  const auto w = find_n_shape(p);
  REQUIRE(w);
  CHECK(w->kind == ShapeKind::N);
  CHECK(w->elements == std::vector<Element>{0, 1, 2, 3});
  CHECK(witness_holds(p, *w));
  CHECK(is_acyclic(p));
  CHECK_FALSE(is_v_free(p));
  // The diamond has no N (its middle pair share both neighbours).
  CHECK(is_n_free(testing::diamond()));
}

TEST_CASE("cover cycles") {
  const auto d = testing::diamond();
  const auto w = find_cover_cycle(d);
  REQUIRE(w);
  CHECK(w->elements.size() == 4);
  CHECK(witness_holds(d, *w));
  CHECK_FALSE(is_acyclic(constructions::boolean_lattice(3)));
  CHECK(is_acyclic(Poset::chain(6)));
  CHECK(is_acyclic(testing::v_poset()));
  // A 6-cycle crown: minima 0,1,2 and maxima 3,4,5.
  const auto crown = testing::from_pairs(6, {{3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
  const auto c = find_cover_cycle(crown);
  REQUIRE(c);
  CHECK(c->elements.size() == 6);
  CHECK(witness_holds(crown, *c));
}

TEST_CASE("central element") {
  CHECK(central_element(Poset::chain(3)) == Element{0});
  CHECK_FALSE(central_element(Poset::antichain(2)));
  // X-shape: 0,1 below 2 below 3,4.
  const auto x = testing::from_pairs(5, {{2, 0}, {2, 1}, {3, 2}, {4, 2}});
  CHECK(central_element(x) == Element{2});
}

TEST_CASE("witnesses always verify over small posets") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& p : enumeration::enumerate_posets(n)) {
      if (auto w = find_v_shape(p)) CHECK(witness_holds(p, *w));
      if (auto w = find_n_shape(p)) CHECK(witness_holds(p, *w));
      if (auto w = find_cover_cycle(p)) CHECK(witness_holds(p, *w));
      if (auto c = central_element(p))
        CHECK(p.above(*c).count() + p.below(*c).count() + 1 == p.size());
    }
}

TEST_CASE("forest test agrees with an edge count on the cover graph") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : enumeration::enumerate_posets(n)) {
      const auto g = cover_graph(p);
      const auto forest = g.edge_count() + connected_components(g).size() == n;
      CHECK(is_acyclic(p) == forest);
    }
}

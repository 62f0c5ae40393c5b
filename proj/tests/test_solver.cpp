#include <doctest.h>

#include <algorithm>
#include <random>

#include "aoposet/constructions.hpp"
#include "aoposet/errors.hpp"
#include "aoposet/solver.hpp"
#include "helpers.hpp"

using namespace aoposet;

namespace {

SimpleGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

void check_result(const SimpleGraph& g, const AoResult& r) {
  CHECK(r.witness.size() == r.value);
  CHECK(r.witness.size() + r.deletions.size() == g.size());
  CHECK_FALSE(is_cluster(induced_subgraph(g, r.witness)));
}

}  // namespace

TEST_CASE("small graphs") {
  CHECK(ao_exact(SimpleGraph(0)).value == 0);
  CHECK(ao_exact(SimpleGraph(5)).value == 5);
  CHECK(ao_exact(complete_graph(6)).value == 6);
  CHECK(ao_exact(path_graph(3)).value == 2);
  CHECK(ao_exact(path_graph(7)).value == 5);
  CHECK(ao_exact(cycle_graph(5)).value == 3);
  CHECK(ao_exact(cycle_graph(6)).value == 4);
  CHECK(ao_brute(cycle_graph(5)) == 3);
  SimpleGraph star(5);
  for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  CHECK(ao_exact(star).value == 4);
}

TEST_CASE("is_cluster finds an induced P3 with its centre in the middle") {
  const auto p3 = is_cluster(path_graph(3));
  REQUIRE(p3);
  CHECK(std::get<1>(*p3) == 1);
  CHECK_FALSE(is_cluster(disjoint_union(complete_graph(3), complete_graph(2))));
}

TEST_CASE("exact equals brute force on random graphs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 400; ++i) {
    const auto g = random_graph(1 + i % 14, 0.1 + 0.1 * (i % 9), rng);
    const auto r = ao_exact(g);
    CHECK(r.value == ao_brute(g));
    check_result(g, r);
  }
}

TEST_CASE("ao is additive over disjoint unions") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_graph(8, 0.4, rng), h = random_graph(9, 0.5, rng);
    CHECK(ao_exact(disjoint_union(g, h)).value == ao_exact(g).value + ao_exact(h).value);
  }
}

TEST_CASE("limits") {
  SolverConfig tiny;
  tiny.node_limit = 1;
  std::mt19937_64 rng(3);
  bool hit = false;
  for (int i = 0; i < 20 && !hit; ++i) {
    try {
      ao_exact(random_graph(30, 0.5, rng), tiny);
    } catch (const NodeLimitExceeded&) {
      hit = true;
    }
  }
  CHECK(hit);
  CHECK_THROWS_AS(ao_brute(SimpleGraph(21)), TooLarge);
  SolverConfig bad;
  bad.max_brute_n = 25;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("deterministic output") {
  std::mt19937_64 rng(99);
  const auto g = random_graph(25, 0.3, rng);
  const auto a = ao_exact(g), b = ao_exact(g);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("ao_poset returns a valid chain family") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const auto p = testing::random_poset(1 + i % 16, 0.25, rng);
    const auto [res, family] = ao_poset(p);
    CHECK(chain_family_error(p, family).empty());
    CHECK(family.element_count() == res.value);
    const auto b = ao_bounds(p);
    CHECK(b.lo <= res.value);
    CHECK(res.value <= b.hi);
  }
}

TEST_CASE("chain family validation") {
  const auto v = testing::v_poset();
  ChainFamily ok{{{0, 1}}};
  CHECK(chain_family_error(v, ok).empty());
  ChainFamily not_chain{{{1, 2}}};
  CHECK_FALSE(chain_family_error(v, not_chain).empty());
  ChainFamily crossing{{{0, 1}, {2}}};
  CHECK_FALSE(chain_family_error(v, crossing).empty());
  ChainFamily repeated{{{1}, {1}}};
  CHECK_FALSE(chain_family_error(v, repeated).empty());
}

TEST_CASE("bounds helpers") {
  CHECK(ceil_sqrt(0) == 0);
  CHECK(ceil_sqrt(1) == 1);
  CHECK(ceil_sqrt(5) == 3);
  CHECK(ceil_sqrt(16) == 4);
  CHECK(ceil_sqrt(17) == 5);
  const auto b = ao_bounds(constructions::boolean_lattice(3));
  CHECK(b.lo == 4);
  CHECK(b.hi == 12);
}

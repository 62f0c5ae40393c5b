#include <doctest.h>

#include "aoposet/constructions.hpp"
#include "aoposet/errors.hpp"
#include "aoposet/extremal.hpp"
#include "aoposet/structure.hpp"

using namespace aoposet;
using namespace aoposet::constructions;

namespace {

std::size_t ao_of(const Poset& p) { return ao_exact(comparability_graph(p)).value; }

}  // namespace

TEST_CASE("lambda_extremal") {
  const auto two = lambda_extremal(2);
  CHECK(two.size() == 3);
  CHECK(ao_brute(comparability_graph(*two.poset)) == 2);
  CHECK(maximal_elements(*two.poset).size() == 1);
  CHECK(lambda_extremal(1).size() == 1);
  for (std::size_t a = 1; a <= 8; ++a) {
    const auto r = lambda_extremal(a);
    CHECK(r.size() == extremal::lambda_closed(a));
    CHECK(verify(r).empty());
    CHECK(is_v_free(*r.poset));
    CHECK(height(*r.poset) == a);
    CHECK(ao_of(*r.poset) == a);
  }
  CHECK_THROWS_AS(lambda_extremal(0), std::invalid_argument);
}

TEST_CASE("lambda_h_extremal") {
  const auto r42 = lambda_h_extremal(4, 2);
  CHECK(r42.size() == 6);
  CHECK(height(*r42.poset) == 2);
  CHECK(ao_brute(comparability_graph(*r42.poset)) == 4);
  const auto r41 = lambda_h_extremal(4, 1);
  CHECK(r41.size() == 4);
  CHECK(*r41.poset == Poset::antichain(4));
  CHECK(*lambda_h_extremal(2, 1).poset == Poset::antichain(2));
  CHECK(lambda_h_extremal(2, 0).size() == 0);
  for (std::size_t a = 1; a <= 10; ++a)
    for (std::size_t h = 0; h <= a; ++h) {
      const bool covered = 2 * h >= a || (a % 2 == 0 && h + 1 == a / 2);
      if (!covered) {
        CHECK_THROWS_AS(lambda_h_extremal(a, h), OutOfSpecifiedRange);
        continue;
      }
      const auto r = lambda_h_extremal(a, h);
      CHECK(r.size() == *extremal::lambda_h(a, h));
      if (r.size() <= 24) CHECK(verify(r).empty());
    }
}

TEST_CASE("x_extremal") {
  const auto two = x_extremal(2);
  CHECK(two.size() == 3);
  CHECK(central_element(*two.poset) == Element{0});
  CHECK(x_extremal(1).size() == 1);
  CHECK(x_extremal(4).size() == 11);
  CHECK(x_extremal(8).size() == 31);
  for (std::size_t a = 2; a <= 6; ++a) {
    const auto r = x_extremal(a);
    CHECK(r.size() == extremal::x_closed(a));
    CHECK(verify(r).empty());
    CHECK(is_acyclic(*r.poset));
    CHECK(is_n_free(*r.poset));
    CHECK(is_connected(*r.poset));
    CHECK(central_element(*r.poset).has_value());
    CHECK(r.conjectural_size == (a % 2 == 1));
  }
}

TEST_CASE("x_extremal(8) against the exact solver") {
  const auto r = x_extremal(8);
  CHECK(ao_poset(*r.poset).first.value == 8);
}

TEST_CASE("boolean lattice and witness") {
  CHECK(boolean_lattice(0).size() == 1);
  CHECK(boolean_lattice(1) == Poset::chain(2));
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto fam = boolean_witness(m);
    const std::size_t want = 2 * binomial(m - 1, (m - 1) / 2);
    CHECK(chain_family_error(boolean_lattice(m), fam).empty());
    CHECK(fam.element_count() == want);
    if (m <= 4 && m != 2) CHECK(ao_of(boolean_lattice(m)) == want);
  }
  // B_2 is the diamond; its 3-chain beats the two-chain family.
  CHECK(ao_of(boolean_lattice(2)) == 3);
  CHECK(2 * binomial(1, 0) == 2);
  CHECK(boolean_witness(3).chains.size() == 2);
  CHECK(boolean_witness(2).element_count() == 2);
  CHECK_THROWS_AS(boolean_lattice(13), TooLarge);
}

TEST_CASE("multipartite") {
  CHECK(multipartite(1).size() == 1);
  const auto p5 = multipartite(5);
  CHECK(height(p5) == 3);
  CHECK(width(p5) == 2);
  CHECK(ao_brute(comparability_graph(p5)) == 3);
  const auto p9 = multipartite(9);
  CHECK(width(p9) == 3);
  CHECK(height(p9) == 3);
  for (std::size_t n = 1; n <= 16; ++n) CHECK(ao_of(multipartite(n)) == ceil_sqrt(n));
}

TEST_CASE("graph examples") {
  CHECK(grid_cliques(1).size() == 1);
  CHECK(grid_cliques(2).edge_count() == 2);
  const auto g3 = grid_cliques(3);
  CHECK(ao_exact(g3).value == 9);
  CHECK(independence_number_brute(g3) == 3);
  CHECK(clique_number_brute(g3) == 3);
  CHECK(ao_brute(planar_c5_join(1)) == 3);
  CHECK(ao_exact(planar_c5_join(2)).value == 6);
  CHECK(planar_c5_join(0).size() == 0);
}

TEST_CASE("verify reports broken claims") {
  auto r = lambda_extremal(3);
  r.claimed_ao = 4;
  r.n_free = false;
  CHECK(verify(r).size() == 2);
}

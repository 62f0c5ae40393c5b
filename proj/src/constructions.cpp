#include "aoposet/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "aoposet/errors.hpp"
#include "aoposet/extremal.hpp"
#include "aoposet/structure.hpp"

namespace aoposet::constructions {

namespace {

using Pairs = std::vector<std::pair<Element, Element>>;

// Cover pairs of a poset under construction; the part added last sits on top.
struct Builder {
  std::size_t n = 0;
  Pairs covers;

  // Appends `p`, returning the index offset of its elements.
  std::size_t append(const Poset& p) {
    const std::size_t off = n;
    for (auto c : cover_pairs(p)) covers.emplace_back(c.upper + off, c.lower + off);
    n += p.size();
    return off;
  }
  Element add_element() { return n++; }
  Poset build() const { return Poset::from_cover_relations(n, covers); }
};

// Maximal elements of `p` shifted by `off`.
std::vector<Element> maxima(const Poset& p, std::size_t off) {
  auto m = maximal_elements(p);
  for (auto& e : m) e += off;
  return m;
}

Poset lambda_poset(std::size_t a) {
  if (a == 0) return Poset::antichain(0);
  if (a == 1) return Poset::antichain(1);
  const std::size_t f = (a + 1) / 2;
  const Poset left = lambda_poset(f);
  const Poset right = lambda_poset(a - f);
  Builder b;
  const auto lo = b.append(left);
  const auto ro = b.append(right);
  // The chain's bottom covers the maximal elements of the parts below it.
  Element prev = b.add_element();
  for (auto m : maxima(left, lo)) b.covers.emplace_back(prev, m);
  for (auto m : maxima(right, ro)) b.covers.emplace_back(prev, m);
  for (std::size_t i = 1; i < a - f; ++i) {
    Element next = b.add_element();
    b.covers.emplace_back(next, prev);
    prev = next;
  }
  return b.build();
}

// Lambda(a, h)-extremal poset wherever a closed form backs it, plus the odd
// case h = (a-1)/2 reached through the same disjoint-union recipe.
Poset lambda_h_poset(std::size_t a, std::size_t h, bool allow_odd_gap) {
  if (h > a) throw OutOfSpecifiedRange("lambda_h_extremal requires h <= a");
  if (2 * h >= a) {
    // Drop the top a - h elements of the top chain; they are numbered last.
    const Poset full = lambda_poset(a);
    std::vector<Element> keep(full.size() - (a - h));
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    return induced_subposet(full, keep);
  }
  const bool minus_one = a % 2 == 0 && h + 1 == a / 2;
  const bool odd_gap = allow_odd_gap && a % 2 == 1 && 2 * h + 1 == a;
  if (!minus_one && !odd_gap)
    throw OutOfSpecifiedRange("no construction for Lambda(" + std::to_string(a) + "," +
                              std::to_string(h) + ")");
  if (a == 2) return Poset::antichain(0);
  if (minus_one && extremal::is_power_of_two(a)) {
    const Poset half = lambda_h_poset(a / 2, a / 2 - 1, false);
    return disjoint_union(half, half);
  }
  const std::size_t power = std::size_t{1} << (extremal::ceil_log2(a) - 1);
  return disjoint_union(lambda_h_poset(power, h, false), lambda_poset(a - power));
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ConstructionReport lambda_extremal(std::size_t a) {
  if (a == 0) throw std::invalid_argument("lambda_extremal requires a >= 1");
  ConstructionReport r;
  r.kind = "lambda";
  r.poset = lambda_poset(a);
  r.claimed_size = extremal::lambda_closed(a);
  r.claimed_ao = a;
  r.claimed_height = a;
  r.v_free = true;
  r.n_free = true;
  r.acyclic = true;
  r.connected = true;
  return r;
}

ConstructionReport lambda_h_extremal(std::size_t a, std::size_t h) {
  if (a == 0) throw std::invalid_argument("lambda_h_extremal requires a >= 1");
  ConstructionReport r;
  r.kind = "lambda-h";
  r.poset = lambda_h_poset(a, h, false);
  r.claimed_size = *extremal::lambda_h(a, h);
  // The only degenerate case is Lambda(2, 0): the empty poset.
  r.claimed_ao = r.claimed_size == 0 ? 0 : a;
  r.claimed_height = h;
  r.v_free = true;
  r.acyclic = true;
  return r;
}

ConstructionReport x_extremal(std::size_t a) {
  if (a == 0) throw std::invalid_argument("x_extremal requires a >= 1");
  const std::size_t lower_h = (a - 1) / 2;
  const std::size_t upper_h = a / 2;
  Poset lower = a == 1 ? Poset::antichain(0) : lambda_h_poset(a, lower_h, true);
  Poset upper = a == 1 ? Poset::antichain(0) : invert(lambda_h_poset(a, upper_h, true));

  Builder b;
  const auto lo = b.append(lower);
  const Element central = b.add_element();
  for (auto m : maxima(lower, lo)) b.covers.emplace_back(central, m);
  const auto uo = b.append(upper);
  for (auto m : minimal_elements(upper)) b.covers.emplace_back(m + uo, central);

  ConstructionReport r;
  r.kind = "x";
  r.poset = b.build();
  r.claimed_size = extremal::x_closed(a);
  r.claimed_ao = a;
  r.claimed_height = a;
  r.n_free = true;
  r.acyclic = true;
  r.connected = true;
  r.central = central;
  r.conjectural_size = a % 2 == 1 && a > 1;
  return r;
}

Poset boolean_lattice(std::size_t m) {
  if (m > 12) throw TooLarge("boolean_lattice supports m <= 12");
  const std::size_t n = std::size_t{1} << m;
  Pairs covers;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < m; ++i)
      if (!(s >> i & 1u)) covers.emplace_back(s | (std::size_t{1} << i), s);
  return Poset::from_cover_relations(n, covers);
}

ChainFamily boolean_witness(std::size_t m) {
  if (m == 0) throw std::invalid_argument("boolean_witness requires m >= 1");
  if (m > 12) throw TooLarge("boolean_witness supports m <= 12");
  const std::size_t r = (m - 1) / 2;
  const std::size_t top = std::size_t{1} << (m - 1);
  ChainFamily family;
  for (std::size_t s = 0; s < top; ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == r) family.chains.push_back({s, s | top});
  return family;
}

Poset multipartite(std::size_t n) {
  // ceil(sqrt n) antichains of near-equal size (larger ones first), so that no
  // part exceeds ceil(sqrt n).
  const std::size_t parts = ceil_sqrt(n);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < parts; ++i) sizes.push_back(n / parts + (i < n % parts ? 1 : 0));
  Pairs covers;
  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    const std::size_t next = start + sizes[i];
    for (std::size_t lower = start; lower < next; ++lower)
      for (std::size_t upper = next; upper < next + sizes[i + 1]; ++upper)
        covers.emplace_back(upper, lower);
    start = next;
  }
  return Poset::from_cover_relations(n, covers);
}

SimpleGraph grid_cliques(std::size_t k) {
  SimpleGraph g(k * k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) g.add_edge(c * k + i, c * k + j);
  return g;
}

SimpleGraph planar_c5_join(std::size_t copies) {
  SimpleGraph g(7 * copies);
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t o = 7 * c;
    for (std::size_t i = 0; i < 5; ++i) {
      g.add_edge(o + i, o + (i + 1) % 5);
      g.add_edge(o + i, o + 5);
      g.add_edge(o + i, o + 6);
    }
  }
  return g;
}

std::vector<std::string> verify(const ConstructionReport& r, const SolverConfig& cfg) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  expect(r.size() == r.claimed_size, "size " + std::to_string(r.size()) + " != claimed " +
                                         std::to_string(r.claimed_size));
  std::size_t ao = 0;
  if (r.poset) {
    const Poset& p = *r.poset;
    if (r.claimed_height)
      expect(height(p) == *r.claimed_height, "height " + std::to_string(height(p)) +
                                                 " != claimed " + std::to_string(*r.claimed_height));
    if (r.v_free) expect(is_v_free(p) == *r.v_free, "v_free claim fails");
    if (r.n_free) expect(is_n_free(p) == *r.n_free, "n_free claim fails");
    if (r.acyclic) expect(is_acyclic(p) == *r.acyclic, "acyclic claim fails");
    if (r.connected) expect(is_connected(p) == *r.connected, "connected claim fails");
    if (r.central)
      expect(*r.central < p.size() &&
                 p.above(*r.central).count() + p.below(*r.central).count() + 1 == p.size(),
             "designated central element is not comparable to everything");
    ao = ao_poset(p, cfg).first.value;
  } else if (r.graph) {
    ao = ao_exact(*r.graph, cfg).value;
  }
  expect(ao == r.claimed_ao,
         "ao " + std::to_string(ao) + " != claimed " + std::to_string(r.claimed_ao));
  return failures;
}

}  // namespace aoposet::constructions

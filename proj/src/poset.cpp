#include "aoposet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "aoposet/errors.hpp"

namespace aoposet {

Poset::Poset(std::vector<Bitset> up) : up_(std::move(up)), down_(up_.size(), Bitset(up_.size())) {
  for (Element p = 0; p < up_.size(); ++p) up_[p].for_each([&](std::size_t q) { down_[q].set(p); });
}

Poset Poset::from_cover_relations(std::size_t n,
                                  std::span<const std::pair<Element, Element>> pairs) {
  std::vector<Bitset> up(n, Bitset(n));
  for (auto [upper, lower] : pairs) {
    if (upper >= n || lower >= n)
      throw std::out_of_range("element index out of range: (" + std::to_string(upper) + "," +
                              std::to_string(lower) + ") with n=" + std::to_string(n));
    if (upper == lower) throw CycleError("element " + std::to_string(upper) + " above itself");
    up[lower].set(upper);
  }
  // Warshall closure on bit rows.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (Element i = 0; i < n; ++i)
    if (up[i].test(i))
      throw CycleError("order pairs contain a directed cycle through element " + std::to_string(i));
  return Poset(std::move(up));
}

Poset Poset::from_relation(const std::vector<std::vector<bool>>& matrix) {
  const std::size_t n = matrix.size();
  std::vector<Bitset> up(n, Bitset(n));
  for (Element p = 0; p < n; ++p) {
    if (matrix[p].size() != n) throw std::invalid_argument("relation matrix is not square");
    for (Element q = 0; q < n; ++q)
      if (matrix[p][q]) up[p].set(q);
  }
  for (Element p = 0; p < n; ++p) {
    if (up[p].test(p)) throw std::invalid_argument("relation is not irreflexive");
    for (Element q = 0; q < n; ++q) {
      if (!up[p].test(q)) continue;
      if (up[q].test(p)) throw std::invalid_argument("relation is not antisymmetric");
      if (!up[q].is_subset_of(up[p])) throw std::invalid_argument("relation is not transitive");
    }
  }
  return Poset(std::move(up));
}

Poset Poset::chain(std::size_t n) {
  std::vector<Bitset> up(n, Bitset(n));
  for (Element p = 0; p < n; ++p)
    for (Element q = p + 1; q < n; ++q) up[p].set(q);
  return Poset(std::move(up));
}

Poset Poset::antichain(std::size_t n) { return Poset(std::vector<Bitset>(n, Bitset(n))); }

std::vector<CoverPair> cover_pairs(const Poset& p) {
  std::vector<CoverPair> out;
  for (Element upper = 0; upper < p.size(); ++upper)
    p.below(upper).for_each([&](std::size_t lower) {
      // A two-step path lower < r < upper rules the pair out.
      if (!p.above(lower).intersects(p.below(upper))) out.push_back({upper, lower});
    });
  return out;
}

SimpleGraph comparability_graph(const Poset& p) {
  SimpleGraph g(p.size());
  for (Element a = 0; a < p.size(); ++a)
    p.above(a).for_each([&](std::size_t b) { g.add_edge(a, b); });
  return g;
}

SimpleGraph cover_graph(const Poset& p) {
  SimpleGraph g(p.size());
  for (auto c : cover_pairs(p)) g.add_edge(c.upper, c.lower);
  return g;
}

std::vector<std::size_t> levels(const Poset& p) {
  // p < q implies below(p) is a proper subset of below(q), so sorting by the
  // number of elements below gives a linear extension.
  std::vector<Element> order(p.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return p.below(a).count() < p.below(b).count();
  });
  std::vector<std::size_t> level(p.size(), 0);
  for (Element e : order)
    p.below(e).for_each([&](std::size_t d) { level[e] = std::max(level[e], level[d] + 1); });
  return level;
}

std::size_t height(const Poset& p) {
  if (p.size() == 0) return 0;
  auto lv = levels(p);
  return *std::max_element(lv.begin(), lv.end()) + 1;
}

namespace {

bool augment(const Poset& p, Element left, std::vector<bool>& visited,
             std::vector<std::ptrdiff_t>& match_right) {
  bool found = false;
  p.above(left).for_each([&](std::size_t right) {
    if (found || visited[right]) return;
    visited[right] = true;
    if (match_right[right] < 0 ||
        augment(p, static_cast<Element>(match_right[right]), visited, match_right)) {
      match_right[right] = static_cast<std::ptrdiff_t>(left);
      found = true;
    }
  });
  return found;
}

}  // namespace

std::size_t width(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::ptrdiff_t> match_right(n, -1);
  std::size_t matching = 0;
  for (Element left = 0; left < n; ++left) {
    std::vector<bool> visited(n, false);
    if (augment(p, left, visited, match_right)) ++matching;
  }
  return n - matching;
}

bool is_connected(const Poset& p) {
  if (p.size() == 0) return true;
  // Comparable elements are joined by a chain of covers, so cover-graph
  // connectivity equals comparability-graph connectivity.
  Bitset seen(p.size());
  std::vector<Element> stack{0};
  seen.set(0);
  while (!stack.empty()) {
    Element e = stack.back();
    stack.pop_back();
    ((p.above(e) | p.below(e)) - seen).for_each([&](std::size_t f) {
      seen.set(f);
      stack.push_back(f);
    });
  }
  return seen.count() == p.size();
}

Poset invert(const Poset& p) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < p.size(); ++a)
    p.above(a).for_each([&](std::size_t b) { pairs.emplace_back(a, b); });
  return Poset::from_cover_relations(p.size(), pairs);
}

Poset disjoint_union(const Poset& first, const Poset& second) {
  const std::size_t shift = first.size();
  std::vector<std::pair<Element, Element>> pairs;
  for (auto c : cover_pairs(first)) pairs.emplace_back(c.upper, c.lower);
  for (auto c : cover_pairs(second)) pairs.emplace_back(c.upper + shift, c.lower + shift);
  return Poset::from_cover_relations(shift + second.size(), pairs);
}

Poset induced_subposet(const Poset& p, std::span<const Element> keep) {
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (p.less(keep[j], keep[i])) pairs.emplace_back(i, j);
  return Poset::from_cover_relations(keep.size(), pairs);
}

Poset relabel(const Poset& p, std::span<const std::size_t> perm) {
  if (perm.size() != p.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < p.size(); ++a)
    p.above(a).for_each([&](std::size_t b) { pairs.emplace_back(perm[b], perm[a]); });
  return Poset::from_cover_relations(p.size(), pairs);
}

std::vector<Element> minimal_elements(const Poset& p) {
  std::vector<Element> out;
  for (Element e = 0; e < p.size(); ++e)
    if (p.below(e).none()) out.push_back(e);
  return out;
}

std::vector<Element> maximal_elements(const Poset& p) {
  std::vector<Element> out;
  for (Element e = 0; e < p.size(); ++e)
    if (p.above(e).none()) out.push_back(e);
  return out;
}

}  // namespace aoposet

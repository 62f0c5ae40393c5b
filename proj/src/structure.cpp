#include "aoposet/structure.hpp"

#include <algorithm>

namespace aoposet {

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::V:
      return "V";
    case ShapeKind::N:
      return "N";
    case ShapeKind::CoverCycle:
      return "cover-cycle";
  }
  return "?";
}

std::optional<ShapeWitness> find_cover_cycle(const Poset& p) {
  const SimpleGraph g = cover_graph(p);
  const std::size_t n = g.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<bool> seen(n, false);

  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    // Iterative DFS; the first non-tree edge closes a cycle.
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      std::optional<Vertex> closing;
      g.neighbors(v).for_each([&](std::size_t w) {
        if (closing || w == parent[v]) return;
        if (seen[w]) {
          closing = w;
          return;
        }
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      });
      if (!closing) continue;
      // Walk both endpoints up to their lowest common ancestor.
      std::vector<Vertex> from_v{v};
      for (Vertex x = v; parent[x] != kNone; x = parent[x]) from_v.push_back(parent[x]);
      std::vector<Vertex> from_w{*closing};
      for (Vertex x = *closing; parent[x] != kNone; x = parent[x]) from_w.push_back(parent[x]);
      while (from_v.size() > 1 && from_w.size() > 1 &&
             from_v[from_v.size() - 2] == from_w[from_w.size() - 2]) {
        from_v.pop_back();
        from_w.pop_back();
      }
      // from_v and from_w now both end at the common ancestor.
      std::vector<Element> cycle(from_v.begin(), from_v.end());
      for (auto it = from_w.rbegin() + 1; it != from_w.rend(); ++it) cycle.push_back(*it);
      return ShapeWitness{ShapeKind::CoverCycle, std::move(cycle)};
    }
  }
  return std::nullopt;
}

std::optional<ShapeWitness> find_v_shape(const Poset& p) {
  for (Element p1 = 0; p1 < p.size(); ++p1) {
    const Bitset& up = p.above(p1);
    for (auto p2 = up.find_first(); p2; p2 = up.find_next(*p2 + 1)) {
      // Elements above p1 that are incomparable to p2 and larger in index.
      Bitset rest = up - p.above(*p2) - p.below(*p2);
      rest.reset(*p2);
      if (auto p3 = rest.find_next(*p2 + 1))
        return ShapeWitness{ShapeKind::V, {p1, *p2, *p3}};
    }
  }
  return std::nullopt;
}

std::optional<ShapeWitness> find_n_shape(const Poset& p) {
  const std::size_t n = p.size();
  for (Element p1 = 0; p1 < n; ++p1) {
    const Bitset& under1 = p.below(p1);
    if (under1.count() < 2) continue;
    for (Element p2 = 0; p2 < n; ++p2) {
      if (p2 == p1 || p.comparable(p1, p2)) continue;
      const Bitset common = under1 & p.below(p2);
      if (common.none()) continue;
      // p3 below p1 but incomparable to p2.
      const Bitset cand3 = under1 - p.below(p2) - p.above(p2);
      for (auto p3 = cand3.find_first(); p3; p3 = cand3.find_next(*p3 + 1)) {
        Bitset cand4 = common - p.below(*p3) - p.above(*p3);
        cand4.reset(*p3);
        if (auto p4 = cand4.find_first())
          return ShapeWitness{ShapeKind::N, {p1, p2, *p3, *p4}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Element> central_element(const Poset& p) {
  for (Element e = 0; e < p.size(); ++e)
    if (p.above(e).count() + p.below(e).count() + 1 == p.size()) return e;
  return std::nullopt;
}

bool witness_holds(const Poset& p, const ShapeWitness& w) {
  const auto& e = w.elements;
  for (auto x : e)
    if (x >= p.size()) return false;
  auto incomparable = [&](Element a, Element b) { return a != b && !p.comparable(a, b); };
  switch (w.kind) {
    case ShapeKind::V:
      return e.size() == 3 && p.less(e[0], e[1]) && p.less(e[0], e[2]) && incomparable(e[1], e[2]);
    case ShapeKind::N:
      return e.size() == 4 && p.less(e[2], e[0]) && p.less(e[3], e[0]) && p.less(e[3], e[1]) &&
             incomparable(e[0], e[1]) && incomparable(e[1], e[2]) && incomparable(e[2], e[3]);
    case ShapeKind::CoverCycle: {
      if (e.size() < 3) return false;
      std::vector<Element> sorted = e;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
      const SimpleGraph g = cover_graph(p);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (!g.adjacent(e[i], e[(i + 1) % e.size()])) return false;
      return true;
    }
  }
  return false;
}

}  // namespace aoposet

#include "aoposet/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "aoposet/errors.hpp"

namespace aoposet {

SimpleGraph::SimpleGraph(std::size_t n) : rows_(n, Bitset(n)) {}

SimpleGraph::SimpleGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
    : SimpleGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size()) throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep) {
  SimpleGraph h(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) h.add_edge(i, j);
  return h;
}

SimpleGraph disjoint_union(const SimpleGraph& first, const SimpleGraph& second) {
  const std::size_t shift = first.size();
  SimpleGraph g(shift + second.size());
  for (auto [u, v] : first.edges()) g.add_edge(u, v);
  for (auto [u, v] : second.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.size(), false);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      g.neighbors(comp[i]).for_each([&](std::size_t v) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      });
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

std::size_t max_independent(const std::vector<std::uint64_t>& adj, std::uint64_t candidates) {
  if (!candidates) return 0;
  // Pick the candidate of maximum remaining degree; if it is isolated so are all.
  int best_v = -1;
  int best_deg = -1;
  for (std::uint64_t c = candidates; c; c &= c - 1) {
    int v = std::countr_zero(c);
    int d = std::popcount(adj[v] & candidates);
    if (d > best_deg) {
      best_deg = d;
      best_v = v;
    }
  }
  if (best_deg == 0) return static_cast<std::size_t>(std::popcount(candidates));
  const std::uint64_t bit = std::uint64_t{1} << best_v;
  std::size_t with = 1 + max_independent(adj, candidates & ~bit & ~adj[best_v]);
  std::size_t without = max_independent(adj, candidates & ~bit);
  return std::max(with, without);
}

std::vector<std::uint64_t> masks(const SimpleGraph& g, bool complement) {
  if (g.size() > 64) throw TooLarge("brute-force alpha/omega supports at most 64 vertices");
  std::vector<std::uint64_t> adj(g.size(), 0);
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = 0; v < g.size(); ++v)
      if (u != v && g.adjacent(u, v) != complement) adj[u] |= std::uint64_t{1} << v;
  return adj;
}

std::uint64_t all_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

std::size_t independence_number_brute(const SimpleGraph& g) {
  return max_independent(masks(g, false), all_mask(g.size()));
}

std::size_t clique_number_brute(const SimpleGraph& g) {
  return max_independent(masks(g, true), all_mask(g.size()));
}

}  // namespace aoposet

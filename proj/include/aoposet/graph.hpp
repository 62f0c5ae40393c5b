#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "aoposet/bitset.hpp"

namespace aoposet {

using Vertex = std::size_t;

/// Undirected graph without loops, stored as bitset adjacency rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n);
  SimpleGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t size() const { return rows_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::size_t edge_count() const;

  // Self-loops are rejected with std::invalid_argument; repeated edges are no-ops.
  void add_edge(Vertex u, Vertex v);

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<Bitset> rows_;
};

/// Subgraph induced by `keep`, vertices renumbered in increasing order.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep);

/// Vertices of `second` are shifted by first.size().
SimpleGraph disjoint_union(const SimpleGraph& first, const SimpleGraph& second);

SimpleGraph complete_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);

// Exhaustive alpha(G) and omega(G); intended for n <= 24.
std::size_t independence_number_brute(const SimpleGraph& g);
std::size_t clique_number_brute(const SimpleGraph& g);

}  // namespace aoposet

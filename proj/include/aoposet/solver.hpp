#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "aoposet/graph.hpp"
#include "aoposet/poset.hpp"

namespace aoposet {

struct SolverConfig {
  std::size_t max_brute_n = 20;  // must not exceed 24
  std::uint64_t node_limit = 100'000'000;
  // The search is always sequential, so results are reproducible either way.
  bool deterministic = true;

  void validate() const;
};

/// ao(G) together with a certificate: the witness induces a disjoint union of
/// cliques, and the deletions are its complement.
struct AoResult {
  std::size_t value = 0;
  std::vector<Vertex> witness;
  std::vector<Vertex> deletions;
  std::uint64_t nodes = 0;  // branch-and-bound nodes visited
};

/// Chains listed bottom-up; chains ordered by their lowest element.
struct ChainFamily {
  std::vector<std::vector<Element>> chains;
  std::size_t element_count() const;
};

/// Empty string if `family` is a valid independent chain family of `p`,
/// otherwise a description of the first violation.
std::string chain_family_error(const Poset& p, const ChainFamily& family);

/// An induced path u - v - w (v in the middle), or nothing if every component
/// of g is a clique.
std::optional<std::tuple<Vertex, Vertex, Vertex>> is_cluster(const SimpleGraph& g);

/// Exact ao(G) by branch and bound over induced P3s. Throws NodeLimitExceeded.
AoResult ao_exact(const SimpleGraph& g, const SolverConfig& cfg = {});

/// Exhaustive oracle: largest vertex subset inducing a cluster graph. Throws
/// TooLarge when g.size() > cfg.max_brute_n.
std::size_t ao_brute(const SimpleGraph& g, const SolverConfig& cfg = {});

/// ao of the comparability graph, with the witness split into chains.
std::pair<AoResult, ChainFamily> ao_poset(const Poset& p, const SolverConfig& cfg = {});

struct AoBounds {
  std::size_t lo = 0;  // max(width, height, ceil(sqrt(n)))
  std::size_t hi = 0;  // width * height
};
AoBounds ao_bounds(const Poset& p);

std::size_t ceil_sqrt(std::size_t n);

}  // namespace aoposet

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "aoposet/poset.hpp"

namespace testing {

inline aoposet::Poset from_pairs(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  return aoposet::Poset::from_cover_relations(n, pairs);
}

// V: 0 below 1 and 2.
inline aoposet::Poset v_poset() { return from_pairs(3, {{1, 0}, {2, 0}}); }

// N: 2 < 0, 3 < 0, 3 < 1.
inline aoposet::Poset n_poset() { return from_pairs(4, {{0, 2}, {0, 3}, {1, 3}}); }

// Diamond: 0 < 1, 2 < 3.
inline aoposet::Poset diamond() { return from_pairs(4, {{1, 0}, {2, 0}, {3, 1}, {3, 2}}); }

inline std::vector<std::size_t> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Random poset: random DAG on a random topological order, closed transitively.
inline aoposet::Poset random_poset(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto order = shuffled(n, rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(order[j], order[i]);
  return aoposet::Poset::from_cover_relations(n, pairs);
}

}  // namespace testing

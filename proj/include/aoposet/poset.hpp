#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "aoposet/bitset.hpp"
#include "aoposet/graph.hpp"

namespace aoposet {

using Element = std::size_t;

/// `upper` covers `lower`: lower < upper with nothing strictly between.
struct CoverPair {
  Element upper;
  Element lower;
  friend bool operator==(const CoverPair&, const CoverPair&) = default;
  friend auto operator<=>(const CoverPair&, const CoverPair&) = default;
};

/// A finite strict partial order on the elements 0..n-1.
///
/// The full order relation is stored (not just the covers): `up[p]` holds every
/// q with p < q and `down[p]` every q with q < p. Instances are immutable once
/// built, so they can be shared freely between threads.
class Poset {
 public:
  Poset() = default;

  /// Transitive closure of (upper, lower) pairs. The pairs may be covers or any
  /// order relations. Throws CycleError if they contain a directed cycle and
  /// std::out_of_range for indices >= n.
  static Poset from_cover_relations(std::size_t n,
                                    std::span<const std::pair<Element, Element>> pairs);

  /// From a full n x n strict-order matrix (matrix[p][q] means p < q). Throws
  /// std::invalid_argument if the matrix is not irreflexive and transitive, or
  /// is not antisymmetric.
  static Poset from_relation(const std::vector<std::vector<bool>>& matrix);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return up_.size(); }
  bool less(Element p, Element q) const { return up_[p].test(q); }
  bool comparable(Element p, Element q) const { return less(p, q) || less(q, p); }
  const Bitset& above(Element p) const { return up_[p]; }
  const Bitset& below(Element p) const { return down_[p]; }

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  explicit Poset(std::vector<Bitset> up);

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

/// Transitive reduction, sorted by (upper, lower).
std::vector<CoverPair> cover_pairs(const Poset& p);

SimpleGraph comparability_graph(const Poset& p);
SimpleGraph cover_graph(const Poset& p);

/// Longest chain; 0 for the empty poset.
std::size_t height(const Poset& p);

/// Largest antichain, as n minus a maximum matching in the split comparability
/// DAG (Dilworth via Koenig).
std::size_t width(const Poset& p);

/// Connectivity of the cover graph. The empty poset counts as connected.
bool is_connected(const Poset& p);

Poset invert(const Poset& p);
Poset disjoint_union(const Poset& first, const Poset& second);

/// Subposet induced on `keep`, renumbered in the given order.
Poset induced_subposet(const Poset& p, std::span<const Element> keep);

/// Relabel: element e of `p` becomes perm[e].
Poset relabel(const Poset& p, std::span<const std::size_t> perm);

/// Minimal elements of p: nothing below them.
std::vector<Element> minimal_elements(const Poset& p);
std::vector<Element> maximal_elements(const Poset& p);

/// Element -> 0-based level, where level(e) = length of the longest chain ending at e minus one.
std::vector<std::size_t> levels(const Poset& p);

}  // namespace aoposet

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aoposet/poset.hpp"

namespace aoposet {

enum class ShapeKind { V, N, CoverCycle };

/// Certificate that a poset fails one of the structural predicates.
///
///  - V:          (p1, p2, p3) with p1 < p2, p1 < p3 and p2, p3 incomparable.
///  - N:          (p1, p2, p3, p4) with p3 < p1, p4 < p1, p4 < p2 and the pairs
///                (p1,p2), (p2,p3), (p3,p4) incomparable.
///  - CoverCycle: consecutive vertices of a cycle in the cover graph.
struct ShapeWitness {
  ShapeKind kind;
  std::vector<Element> elements;
  friend bool operator==(const ShapeWitness&, const ShapeWitness&) = default;
};

std::string to_string(ShapeKind kind);

/// Returns a cycle of the cover graph, or nothing if the cover graph is a forest.
std::optional<ShapeWitness> find_cover_cycle(const Poset& p);

/// Lexicographically first V-shape (p1, p2, p3), or nothing if p is V-free.
std::optional<ShapeWitness> find_v_shape(const Poset& p);

/// Lexicographically first N-shape (p1, p2, p3, p4), or nothing if p is N-free.
std::optional<ShapeWitness> find_n_shape(const Poset& p);

/// Smallest element comparable to every other element.
std::optional<Element> central_element(const Poset& p);

inline bool is_acyclic(const Poset& p) { return !find_cover_cycle(p).has_value(); }
inline bool is_v_free(const Poset& p) { return !find_v_shape(p).has_value(); }
inline bool is_n_free(const Poset& p) { return !find_n_shape(p).has_value(); }

/// Checks the invariant of `w` against `p`.
bool witness_holds(const Poset& p, const ShapeWitness& w);

}  // namespace aoposet

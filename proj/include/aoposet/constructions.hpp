#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aoposet/graph.hpp"
#include "aoposet/poset.hpp"
#include "aoposet/solver.hpp"

namespace aoposet::constructions {

/// A generated object together with the properties it is claimed to have.
/// Unset predicate claims are not part of the contract of that generator.
struct ConstructionReport {
  std::string kind;
  std::optional<Poset> poset;
  std::optional<SimpleGraph> graph;
  std::size_t claimed_size = 0;
  std::size_t claimed_ao = 0;
  std::optional<std::size_t> claimed_height;
  std::optional<bool> v_free;
  std::optional<bool> n_free;
  std::optional<bool> acyclic;
  std::optional<bool> connected;
  std::optional<Element> central;  // designated join element, when there is one
  // Set when the size is not backed by a closed form (odd a for x_extremal).
  bool conjectural_size = false;

  std::size_t size() const { return poset ? poset->size() : graph ? graph->size() : 0; }
};

/// Failed claims of `report`, checked with the structure predicates and the
/// exact solver. Empty when every claim holds. Throws NodeLimitExceeded.
std::vector<std::string> verify(const ConstructionReport& report, const SolverConfig& cfg = {});

/// V-free poset of size Lambda(a), height a, ao = a. Split at f = ceil(a/2):
/// a chain of a - f elements placed above the disjoint union of the f and
/// a - f constructions. Elements numbered depth-first: left part, right part,
/// then the chain bottom-up.
ConstructionReport lambda_extremal(std::size_t a);

/// V-free poset of size Lambda(a, h) with ao = a and height <= h, for
/// a/2 <= h <= a, or a even with h = a/2 - 1. Throws OutOfSpecifiedRange
/// otherwise.
ConstructionReport lambda_h_extremal(std::size_t a, std::size_t h);

/// Acyclic N-free connected poset with ao = a: a V-free lower part, a central
/// element, and an inverted V-free upper part. Size X(a) for even a; for odd a
/// the lower part has no closed-form backing and the report is flagged.
ConstructionReport x_extremal(std::size_t a);

/// Subsets of {1..m} under strict inclusion; element index = bitmask.
Poset boolean_lattice(std::size_t m);

/// The 2-chains {A, A + {m}} for A a floor((m-1)/2)-subset of {1..m-1}.
ChainFamily boolean_witness(std::size_t m);

/// ceil(sqrt n) antichain parts (floor(sqrt n) of size floor(sqrt n) and one of
/// size n - floor(sqrt n)^2), every part below every later part.
Poset multipartite(std::size_t n);

/// k disjoint copies of K_k.
SimpleGraph grid_cliques(std::size_t k);

/// `copies` disjoint copies of C5 joined to an independent pair (7 vertices each).
SimpleGraph planar_c5_join(std::size_t copies);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace aoposet::constructions

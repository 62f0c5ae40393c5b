#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "aoposet/poset.hpp"
#include "aoposet/solver.hpp"

namespace aoposet::enumeration {

inline constexpr std::size_t kMaxEnumerationSize = 7;
inline constexpr std::size_t kMaxCanonicalSize = 8;

/// Isomorphism-invariant encoding of a poset: the first byte is n, followed by
/// the relation bits taken in the order (less(j,k), less(k,j)) for k = 1..n-1,
/// j = 0..k-1, packed most-significant-bit first. The key is the minimum of
/// this encoding over all n! relabelings.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Key plus the relabeling that realises it (element e goes to position perm[e]).
struct Canonical {
  CanonicalKey key;
  std::vector<std::size_t> perm;
};

/// Throws TooLarge for n > kMaxCanonicalSize.
Canonical canonicalize(const Poset& p);
inline CanonicalKey canonical_key(const Poset& p) { return canonicalize(p).key; }

/// One representative per isomorphism class of n-element posets, each already
/// relabeled into canonical form, sorted by key. Classes of size n are grown
/// from those of size n-1 by adding a new maximal element above each down-set.
/// Throws TooLarge for n > kMaxEnumerationSize. Results are cached.
const std::vector<Poset>& enumerate_posets(std::size_t n);

/// The members of enumerate_posets(n) whose cover graph is a forest.
std::vector<Poset> enumerate_acyclic(std::size_t n);

/// Minimum ao over a family with the first minimiser (family order). An empty
/// family throws std::invalid_argument.
std::pair<std::size_t, Poset> min_ao(const std::vector<Poset>& family,
                                     const SolverConfig& cfg = {});

/// min ao over T_n equals the minimum over its connected N-free members.
bool verify_connected_nfree_attainment(std::size_t n, const SolverConfig& cfg = {});

/// Largest V-free poset with at most n_cap elements, ao = a and height <= h;
/// 0 when there is none.
std::size_t oracle_lambda_h(std::size_t a, std::size_t h, std::size_t n_cap,
                            const SolverConfig& cfg = {});

/// One row of the golden CSV for an enumerated poset.
struct GoldenRow {
  std::string key_hex;
  std::size_t ao;
  std::size_t height;
  std::size_t width;
  bool acyclic;
  bool v_free;
  bool n_free;
  bool connected;
};

GoldenRow golden_row(const Poset& p, const SolverConfig& cfg = {});

/// Golden file text for size n: a comment line naming the generating command,
/// the CSV header, then one row per class in key order.
std::string golden_csv(std::size_t n, const SolverConfig& cfg = {});

}  // namespace aoposet::enumeration

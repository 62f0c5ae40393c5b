#include "aoposet/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "aoposet/errors.hpp"

namespace aoposet {

void SolverConfig::validate() const {
  if (max_brute_n > 24) throw std::invalid_argument("max_brute_n must be at most 24");
}

std::size_t ChainFamily::element_count() const {
  std::size_t c = 0;
  for (const auto& ch : chains) c += ch.size();
  return c;
}

std::string chain_family_error(const Poset& p, const ChainFamily& family) {
  std::vector<std::ptrdiff_t> owner(p.size(), -1);
  for (std::size_t c = 0; c < family.chains.size(); ++c) {
    const auto& chain = family.chains[c];
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const Element e = chain[i];
      if (e >= p.size()) return "element " + std::to_string(e) + " out of range";
      if (owner[e] >= 0) return "element " + std::to_string(e) + " appears twice";
      owner[e] = static_cast<std::ptrdiff_t>(c);
      if (i > 0 && !p.less(chain[i - 1], e))
        return "chain " + std::to_string(c) + " is not increasing at element " + std::to_string(e);
    }
  }
  for (Element a = 0; a < p.size(); ++a) {
    if (owner[a] < 0) continue;
    for (Element b = a + 1; b < p.size(); ++b)
      if (owner[b] >= 0 && owner[a] != owner[b] && p.comparable(a, b))
        return "elements " + std::to_string(a) + " and " + std::to_string(b) +
               " from different chains are comparable";
  }
  return {};
}

std::optional<std::tuple<Vertex, Vertex, Vertex>> is_cluster(const SimpleGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    const Bitset& nv = g.neighbors(v);
    for (auto u = nv.find_first(); u; u = nv.find_next(*u + 1)) {
      Bitset rest = nv - g.neighbors(*u);
      rest.reset(*u);
      if (auto w = rest.find_first()) return std::tuple{*u, v, *w};
    }
  }
  return std::nullopt;
}

namespace {

using Word = std::uint64_t;

// Branch and bound for minimum cluster vertex deletion.
//
// A subproblem is a set of alive vertices plus the subset committed to stay
// ("permanent"). Branching on an induced P3 with non-permanent vertices
// x1, x2, x3 (highest degree first) explores {delete x1}, {keep x1, delete x2},
// {keep x1, x2, delete x3}, which partitions the solution space. A P3 with a
// single non-permanent vertex forces its deletion; one with none is
// infeasible. Connected components are solved independently.
class ClusterDeletionSearch {
 public:
  ClusterDeletionSearch(const SimpleGraph& g, std::uint64_t node_limit)
      : n_(g.size()), words_((n_ + 63) / 64), adj_(n_ * words_, 0), node_limit_(node_limit) {
    for (Vertex v = 0; v < n_; ++v)
      g.neighbors(v).for_each([&](std::size_t u) { adj_[v * words_ + u / 64] |= bit(u); });
  }

  AoResult run() {
    Set all(words_, 0);
    for (Vertex v = 0; v < n_; ++v) all[v / 64] |= bit(v);
    const Set none(words_, 0);
    const auto start = greedy(all);
    auto best = solve(all, none, start.size() + 1);
    AoResult r;
    r.deletions = best ? std::move(*best) : start;
    std::sort(r.deletions.begin(), r.deletions.end());
    std::vector<bool> gone(n_, false);
    for (auto v : r.deletions) gone[v] = true;
    for (Vertex v = 0; v < n_; ++v)
      if (!gone[v]) r.witness.push_back(v);
    r.value = r.witness.size();
    r.nodes = nodes_;
    return r;
  }

 private:
  using Set = std::vector<Word>;
  using Deletions = std::vector<Vertex>;

  struct P3 {
    Vertex u, v, w;  // v is the middle vertex
  };

  static Word bit(std::size_t i) { return Word{1} << (i % 64); }
  static bool has(const Set& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1u; }
  static void drop(Set& s, std::size_t i) { s[i / 64] &= ~bit(i); }
  const Word* row(Vertex v) const { return adj_.data() + v * words_; }

  std::size_t degree(const Set& alive, Vertex v) const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < words_; ++i) d += std::popcount(row(v)[i] & alive[i]);
    return d;
  }

  static std::optional<Vertex> first_in(const Set& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(m[i]));
    return std::nullopt;
  }

  // Calls f(u, v, mask-of-w) for each alive center v and alive neighbor u,
  // where mask-of-w are the alive w completing an induced P3 u - v - w.
  // f returns true to stop.
  template <typename F>
  bool for_each_p3_fan(const Set& alive, F&& f) const {
    Set nv(words_), others(words_);
    for (Vertex v = 0; v < n_; ++v) {
      if (!has(alive, v)) continue;
      for (std::size_t i = 0; i < words_; ++i) nv[i] = row(v)[i] & alive[i];
      for (std::size_t wi = 0; wi < words_; ++wi) {
        for (Word bits = nv[wi]; bits; bits &= bits - 1) {
          const Vertex u = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bool any = false;
          for (std::size_t i = 0; i < words_; ++i) {
            others[i] = nv[i] & ~row(u)[i];
            if (i == u / 64) others[i] &= ~bit(u);
            any |= others[i] != 0;
          }
          if (any && f(u, v, others)) return true;
        }
      }
    }
    return false;
  }

  // Applies forced deletions until none remain; false when infeasible.
  // Deleting vertices never creates an induced P3, so each pass collects every
  // forced vertex it sees.
  bool close(Set& alive, const Set& perm, Deletions& out) const {
    while (true) {
      Set forced(words_, 0);
      bool any = false, infeasible = false;
      for_each_p3_fan(alive, [&](Vertex u, Vertex v, const Set& ws) {
        const bool pu = has(perm, u), pv = has(perm, v);
        if ((!pu && !pv) || has(forced, u) || has(forced, v)) return false;
        bool w_perm = false;
        for (std::size_t i = 0; i < words_; ++i) {
          w_perm |= (ws[i] & perm[i]) != 0;
          if (pu && pv) {
            forced[i] |= ws[i] & ~perm[i];
            any |= (ws[i] & ~perm[i]) != 0;
          }
        }
        if (pu && pv) {
          infeasible = w_perm;
          return infeasible;
        }
        if (w_perm) {
          const Vertex x = pu ? v : u;
          forced[x / 64] |= bit(x);
          any = true;
        }
        return false;
      });
      if (infeasible) return false;
      if (!any) return true;
      for (std::size_t i = 0; i < words_; ++i) {
        alive[i] &= ~forced[i];
        for (Word bits = forced[i]; bits; bits &= bits - 1)
          out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  // Induced P3s that share no non-permanent vertex: each forces a distinct
  // deletion.
  std::size_t packing_bound(const Set& alive, const Set& perm) const {
    Set avail = alive;
    Set nv(words_), others(words_);
    std::size_t count = 0;
    for (Vertex v = 0; v < n_; ++v) {
      while (has(avail, v)) {
        for (std::size_t i = 0; i < words_; ++i) nv[i] = row(v)[i] & avail[i];
        std::optional<P3> hit;
        for (std::size_t wi = 0; wi < words_ && !hit; ++wi) {
          for (Word bits = nv[wi]; bits && !hit; bits &= bits - 1) {
            const Vertex u = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            for (std::size_t i = 0; i < words_; ++i) others[i] = nv[i] & ~row(u)[i];
            others[u / 64] &= ~bit(u);
            if (auto w = first_in(others)) hit = P3{u, v, *w};
          }
        }
        if (!hit) break;
        bool consumed = false;
        for (Vertex x : {hit->u, hit->v, hit->w}) {
          if (has(perm, x)) continue;
          drop(avail, x);
          consumed = true;
        }
        if (!consumed) break;
        ++count;
      }
    }
    return count;
  }

  // Connected components of the alive graph that still contain an induced P3.
  std::vector<Set> dirty_components(const Set& alive) const {
    std::vector<Set> out;
    Set left = alive;
    while (auto seed = first_in(left)) {
      Set comp(words_, 0), frontier(words_, 0);
      comp[*seed / 64] |= bit(*seed);
      frontier[*seed / 64] |= bit(*seed);
      drop(left, *seed);
      while (auto x = first_in(frontier)) {
        drop(frontier, *x);
        for (std::size_t i = 0; i < words_; ++i) {
          const Word fresh = row(*x)[i] & left[i];
          comp[i] |= fresh;
          frontier[i] |= fresh;
          left[i] &= ~fresh;
        }
      }
      const bool dirty = for_each_p3_fan(comp, [](Vertex, Vertex, const Set&) { return true; });
      if (dirty) out.push_back(std::move(comp));
    }
    return out;
  }

  std::optional<P3> pick_branch_p3(const Set& alive, const Set& perm) const {
    // Highest-degree non-permanent vertex lying on some induced P3.
    std::optional<P3> best;
    std::size_t best_deg = 0;
    for_each_p3_fan(alive, [&](Vertex u, Vertex v, const Set& ws) {
      const Vertex w = *first_in(ws);
      for (Vertex x : {u, v, w}) {
        if (has(perm, x)) continue;
        const std::size_t d = degree(alive, x);
        if (!best || d > best_deg) {
          best = P3{u, v, w};
          best_deg = d;
        }
      }
      return false;
    });
    return best;
  }

  Deletions greedy(Set alive) const {
    Deletions out;
    while (true) {
      std::optional<P3> p3;
      for_each_p3_fan(alive, [&](Vertex u, Vertex v, const Set& ws) {
        p3 = P3{u, v, *first_in(ws)};
        return true;
      });
      if (!p3) return out;
      Vertex pick = p3->u;
      for (Vertex x : {p3->v, p3->w})
        if (degree(alive, x) > degree(alive, pick)) pick = x;
      drop(alive, pick);
      out.push_back(pick);
    }
  }

  // Minimum deletion set of size < budget for the alive subgraph, or nothing.
  std::optional<Deletions> solve(Set alive, const Set& perm, std::size_t budget) {
    if (++nodes_ > node_limit_)
      throw NodeLimitExceeded("branch-and-bound node limit " + std::to_string(node_limit_) +
                              " exceeded");
    Deletions forced;
    if (!close(alive, perm, forced) || forced.size() >= budget) return std::nullopt;
    budget -= forced.size();

    auto comps = dirty_components(alive);
    if (comps.empty()) return forced;
    if (comps.size() > 1) {
      std::vector<std::size_t> lb;
      std::size_t total = 0;
      for (const auto& c : comps) total += lb.emplace_back(packing_bound(c, perm));
      if (total >= budget) return std::nullopt;
      std::size_t used = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        total -= lb[i];
        auto part = solve(comps[i], perm, budget - used - total);
        if (!part) return std::nullopt;
        used += part->size();
        forced.insert(forced.end(), part->begin(), part->end());
      }
      return forced;
    }

    alive = std::move(comps.front());
    if (packing_bound(alive, perm) >= budget) return std::nullopt;
    const auto p3 = pick_branch_p3(alive, perm);
    std::vector<Vertex> order;
    for (Vertex x : {p3->u, p3->v, p3->w})
      if (!has(perm, x)) order.push_back(x);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return degree(alive, a) > degree(alive, b); });
    std::optional<Deletions> best;
    Set child_perm = perm;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) child_perm[order[i - 1] / 64] |= bit(order[i - 1]);
      Set child = alive;
      drop(child, order[i]);
      if (auto r = solve(std::move(child), child_perm, budget - 1)) {
        r->push_back(order[i]);
        budget = r->size();
        best = std::move(r);
        if (budget == 0) break;
      }
    }
    if (!best) return std::nullopt;
    forced.insert(forced.end(), best->begin(), best->end());
    return forced;
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Word> adj_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

AoResult ao_exact(const SimpleGraph& g, const SolverConfig& cfg) {
  cfg.validate();
  return ClusterDeletionSearch(g, cfg.node_limit).run();
}

std::size_t ao_brute(const SimpleGraph& g, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.size();
  if (n > cfg.max_brute_n)
    throw TooLarge("ao_brute: n=" + std::to_string(n) + " exceeds max_brute_n=" +
                   std::to_string(cfg.max_brute_n));
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    g.neighbors(v).for_each([&](std::size_t u) { closed[v] |= std::uint32_t{1} << u; });
  }
  // Cluster graph <=> adjacent vertices have equal closed neighbourhoods.
  auto is_cluster_mask = [&](std::uint32_t mask) {
    for (std::uint32_t m = mask; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const std::uint32_t nv = closed[v] & mask;
      for (std::uint32_t k = nv; k; k &= k - 1)
        if ((closed[std::countr_zero(k)] & mask) != nv) return false;
    }
    return true;
  };
  for (std::size_t size = n; size > 0; --size) {
    // Gosper's hack over all masks with `size` bits.
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      if (is_cluster_mask(static_cast<std::uint32_t>(mask))) return size;
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return 0;
}

std::pair<AoResult, ChainFamily> ao_poset(const Poset& p, const SolverConfig& cfg) {
  const SimpleGraph g = comparability_graph(p);
  AoResult r = ao_exact(g, cfg);
  ChainFamily family;
  const SimpleGraph kept = induced_subgraph(g, r.witness);
  for (const auto& comp : connected_components(kept)) {
    std::vector<Element> chain;
    for (auto i : comp) chain.push_back(r.witness[i]);
    std::sort(chain.begin(), chain.end(),
              [&](Element a, Element b) { return p.less(a, b); });
    family.chains.push_back(std::move(chain));
  }
  std::sort(family.chains.begin(), family.chains.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return {std::move(r), std::move(family)};
}

std::size_t ceil_sqrt(std::size_t n) {
  std::size_t r = 0;
  while (r * r < n) ++r;
  return r;
}

AoBounds ao_bounds(const Poset& p) {
  const std::size_t w = width(p), h = height(p);
  return {std::max({w, h, ceil_sqrt(p.size())}), w * h};
}

}  // namespace aoposet

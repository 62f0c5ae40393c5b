#include "aoposet/enumeration.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "aoposet/errors.hpp"
#include "aoposet/structure.hpp"

namespace aoposet::enumeration {

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (auto b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

namespace {

// Depth-first search over labelings position by position. After positions
// 0..k are fixed, the first k(k+1) key bits are final, so any branch whose
// prefix exceeds the best full key's prefix is cut.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Poset& p)
      : p_(p), n_(p.size()), total_bits_(n_ * (n_ - (n_ > 0 ? 1 : 0))), order_(n_), used_(n_, false) {}

  Canonical run() {
    if (n_ > 0) dfs(0, 0);
    Canonical c;
    c.key.bytes.assign(1 + (total_bits_ + 7) / 8, 0);
    c.key.bytes[0] = static_cast<std::uint8_t>(n_);
    for (std::size_t b = 0; b < total_bits_; ++b)
      if ((best_ >> (total_bits_ - 1 - b)) & 1u) c.key.bytes[1 + b / 8] |= 0x80u >> (b % 8);
    c.perm.assign(n_, 0);
    for (std::size_t pos = 0; pos < n_; ++pos) c.perm[best_order_[pos]] = pos;
    return c;
  }

 private:
  void dfs(std::size_t k, std::uint64_t prefix) {
    for (Element e = 0; e < n_; ++e) {
      if (used_[e]) continue;
      std::uint64_t next = prefix;
      for (std::size_t j = 0; j < k; ++j) {
        next = (next << 1) | (p_.less(order_[j], e) ? 1u : 0u);
        next = (next << 1) | (p_.less(e, order_[j]) ? 1u : 0u);
      }
      const std::size_t bits = k * (k + 1);
      if (found_ && next > (best_ >> (total_bits_ - bits))) continue;
      order_[k] = e;
      if (k + 1 == n_) {
        if (!found_ || next < best_) {
          best_ = next;
          best_order_ = order_;
          found_ = true;
        }
        continue;
      }
      used_[e] = true;
      dfs(k + 1, next);
      used_[e] = false;
    }
  }

  const Poset& p_;
  std::size_t n_;
  std::size_t total_bits_;
  std::vector<Element> order_;
  std::vector<bool> used_;
  bool found_ = false;
  std::uint64_t best_ = 0;
  std::vector<Element> best_order_;
};

}  // namespace

Canonical canonicalize(const Poset& p) {
  if (p.size() > kMaxCanonicalSize)
    throw TooLarge("canonicalization supports at most " + std::to_string(kMaxCanonicalSize) +
                   " elements");
  return Canonicalizer(p).run();
}

const std::vector<Poset>& enumerate_posets(std::size_t n) {
  if (n > kMaxEnumerationSize)
    throw TooLarge("enumeration supports at most " + std::to_string(kMaxEnumerationSize) +
                   " elements");
  static std::mutex mu;
  static std::vector<std::vector<Poset>> cache{{Poset::antichain(0)}};
  std::lock_guard lock(mu);
  while (cache.size() <= n) {
    const std::size_t m = cache.size();  // building size m from size m - 1
    std::map<CanonicalKey, Poset> classes;
    for (const Poset& q : cache[m - 1]) {
      const auto base = cover_pairs(q);
      for (std::uint32_t down = 0; down < (std::uint32_t{1} << (m - 1)); ++down) {
        bool closed = true;
        for (Element d = 0; d < m - 1 && closed; ++d)
          if (down >> d & 1u)
            q.below(d).for_each([&](std::size_t e) { closed = closed && (down >> e & 1u); });
        if (!closed) continue;
        std::vector<std::pair<Element, Element>> pairs;
        for (auto c : base) pairs.emplace_back(c.upper, c.lower);
        for (Element d = 0; d < m - 1; ++d)
          if (down >> d & 1u) pairs.emplace_back(m - 1, d);
        const Poset p = Poset::from_cover_relations(m, pairs);
        auto canon = canonicalize(p);
        if (!classes.contains(canon.key)) classes.emplace(canon.key, relabel(p, canon.perm));
      }
    }
    std::vector<Poset> level;
    level.reserve(classes.size());
    for (auto& [key, p] : classes) level.push_back(std::move(p));
    cache.push_back(std::move(level));
  }
  return cache[n];
}

std::vector<Poset> enumerate_acyclic(std::size_t n) {
  std::vector<Poset> out;
  for (const Poset& p : enumerate_posets(n))
    if (is_acyclic(p)) out.push_back(p);
  return out;
}

std::pair<std::size_t, Poset> min_ao(const std::vector<Poset>& family, const SolverConfig& cfg) {
  if (family.empty()) throw std::invalid_argument("min_ao over an empty family");
  std::size_t best = 0;
  const Poset* arg = nullptr;
  for (const Poset& p : family) {
    const std::size_t v = ao_brute(comparability_graph(p), cfg);
    if (!arg || v < best) {
      best = v;
      arg = &p;
    }
  }
  return {best, *arg};
}

bool verify_connected_nfree_attainment(std::size_t n, const SolverConfig& cfg) {
  const auto all = enumerate_acyclic(n);
  std::vector<Poset> nice;
  for (const Poset& p : all)
    if (is_connected(p) && is_n_free(p)) nice.push_back(p);
  if (nice.empty()) return false;
  return min_ao(all, cfg).first == min_ao(nice, cfg).first;
}

std::size_t oracle_lambda_h(std::size_t a, std::size_t h, std::size_t n_cap,
                            const SolverConfig& cfg) {
  if (n_cap > kMaxEnumerationSize)
    throw TooLarge("oracle_lambda_h: n_cap exceeds the enumeration guard");
  for (std::size_t n = n_cap + 1; n-- > 0;)
    for (const Poset& p : enumerate_posets(n))
      if (height(p) <= h && is_v_free(p) && ao_brute(comparability_graph(p), cfg) == a) return n;
  return 0;
}

GoldenRow golden_row(const Poset& p, const SolverConfig& cfg) {
  return {canonical_key(p).hex(),
          ao_brute(comparability_graph(p), cfg),
          height(p),
          width(p),
          is_acyclic(p),
          is_v_free(p),
          is_n_free(p),
          is_connected(p)};
}

std::string golden_csv(std::size_t n, const SolverConfig& cfg) {
  std::ostringstream out;
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << "# generated by: aoposet golden --n " << n << "\n";
  out << "canonical_key_hex,ao,height,width,acyclic,v_free,n_free,connected\n";
  for (const Poset& p : enumerate_posets(n)) {
    const auto r = golden_row(p, cfg);
    out << r.key_hex << ',' << r.ao << ',' << r.height << ',' << r.width << ',' << b(r.acyclic)
        << ',' << b(r.v_free) << ',' << b(r.n_free) << ',' << b(r.connected) << '\n';
  }
  return out.str();
}

}  // namespace aoposet::enumeration

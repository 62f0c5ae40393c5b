#include "aoposet/battery.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "aoposet/constructions.hpp"
#include "aoposet/enumeration.hpp"
#include "aoposet/errors.hpp"
#include "aoposet/extremal.hpp"
#include "aoposet/structure.hpp"

namespace aoposet::battery {

namespace {

using extremal::Count;
namespace cons = aoposet::constructions;
namespace en = aoposet::enumeration;

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok && r_.failures.size() < 20) r_.failures.push_back(what());
    if (!ok) ++failed_;
  }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }

 private:
  CriterionResult& r_;
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
};

std::string s(std::size_t v) { return std::to_string(v); }

void formula_consistency(Checker& c) {
  for (Count a = 1; a <= 4096; ++a) {
    const Count closed = extremal::lambda_closed(a), rec = extremal::lambda_rec(a);
    c.expect(closed == rec, [&] { return "Lambda(" + s(a) + "): closed " + s(closed) + " rec " + s(rec); });
  }
  for (Count k = 0; k <= 12; ++k) {
    const Count a = Count{1} << k;
    const Count want = ((k + 2) << k) / 2;
    c.expect(extremal::lambda_closed(a) == want, [&] { return "Lambda(2^" + s(k) + ") != " + s(want); });
  }
}

void x_identity(Checker& c) {
  for (Count a = 2; a <= 4096; ++a) {
    const Count sum = extremal::x_closed(a), id = extremal::x_closed_identity(a);
    c.expect(sum == id, [&] { return "X(" + s(a) + "): sum " + s(sum) + " identity " + s(id); });
  }
  for (Count k = 1; k <= 12; ++k) {
    const Count want = ((k + 1) << k) - 1;
    c.expect(extremal::x_closed(Count{1} << k) == want, [&] { return "X(2^" + s(k) + ") != " + s(want); });
  }
}

void x_via_maximization(Checker& c, const Options& o) {
  for (Count a = 2; a <= 512; a += 2) {
    const Count v = extremal::x_via_max(a, {});
    c.expect(v == extremal::x_closed(a), [&] { return "x_via_max(" + s(a) + ") = " + s(v); });
  }
  const std::size_t n_cap = std::min<std::size_t>(o.max_n, en::kMaxEnumerationSize);
  for (Count a = 3; a <= 511; a += 2) {
    bool unspecified = false;
    try {
      extremal::x_via_max(a, {});
    } catch (const Unspecified&) {
      unspecified = true;
    }
    c.expect(unspecified, [&] { return "x_via_max(" + s(a) + ") did not report Unspecified"; });

    // Confirm Lambda(a, (a-1)/2) by enumeration when its upper bound fits.
    const Count h = (a - 1) / 2;
    const Count bound = extremal::lambda_closed(a) - (a - h);
    if (bound > n_cap) continue;
    const Count found = en::oracle_lambda_h(a, h, n_cap, o.solver);
    c.expect(found == bound, [&] {
      return "oracle Lambda(" + s(a) + "," + s(h) + ") = " + s(found) + ", bound " + s(bound);
    });
    const extremal::ConfirmedLambdaH confirmed{a, h, found};
    const Count v = extremal::x_via_max(a, std::span(&confirmed, 1));
    c.expect(v == extremal::x_closed(a), [&] { return "confirmed x_via_max(" + s(a) + ") = " + s(v); });
  }
}

void report_failures(Checker& c, const cons::ConstructionReport& r, const std::string& label,
                     const SolverConfig& cfg) {
  const auto bad = cons::verify(r, cfg);
  c.expect(bad.empty(), [&] { return label + ": " + bad.front(); });
}

void constructions_vs_solver(Checker& c, const Options& o) {
  for (std::size_t a = 1; a <= o.max_a; ++a) {
    auto r = cons::lambda_extremal(a);
    report_failures(c, r, "lambda_extremal(" + s(a) + ")", o.solver);
    const auto v = ao_exact(comparability_graph(*r.poset), o.solver).value;
    c.expect(v == a, [&] { return "ao_exact(lambda_extremal(" + s(a) + ")) = " + s(v); });
  }
  for (std::size_t a = 2; a <= std::min<std::size_t>(o.max_a, 6); ++a) {
    auto r = cons::x_extremal(a);
    report_failures(c, r, "x_extremal(" + s(a) + ")", o.solver);
    c.expect(r.size() == extremal::x_closed(a), [&] { return "x_extremal(" + s(a) + ") size"; });
    const auto v = ao_exact(comparability_graph(*r.poset), o.solver).value;
    c.expect(v == a, [&] { return "ao_exact(x_extremal(" + s(a) + ")) = " + s(v); });
  }
}

std::size_t boolean_value(std::size_t m) { return 2 * cons::binomial(m - 1, (m - 1) / 2); }

void boolean_lattice(Checker& c, const Options& o) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto v = ao_exact(comparability_graph(cons::boolean_lattice(m)), o.solver).value;
    c.expect(v == boolean_value(m), [&] { return "ao(B_" + s(m) + ") = " + s(v); });
  }
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto fam = cons::boolean_witness(m);
    const auto err = chain_family_error(cons::boolean_lattice(m), fam);
    c.expect(err.empty(), [&] { return "boolean_witness(" + s(m) + "): " + err; });
    c.expect(fam.element_count() == boolean_value(m),
             [&] { return "boolean_witness(" + s(m) + ") has " + s(fam.element_count()); });
  }
}

void all_posets_sqrt(Checker& c, const Options& o) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(o.max_n, 6); ++n) {
    const auto v = en::min_ao(en::enumerate_posets(n), o.solver).first;
    c.expect(v == ceil_sqrt(n), [&] { return "min ao over all " + s(n) + "-posets = " + s(v); });
  }
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto v = ao_exact(comparability_graph(cons::multipartite(n)), o.solver).value;
    c.expect(v == ceil_sqrt(n), [&] { return "ao(multipartite(" + s(n) + ")) = " + s(v); });
  }
}

void acyclic_bracket(Checker& c, const Options& o) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(o.max_n, 7); ++n) {
    const auto v = en::min_ao(en::enumerate_acyclic(n), o.solver).first;
    const auto b = extremal::ao_Tn_bounds(n);
    c.expect(v == b.predicted,
             [&] { return "n=" + s(n) + ": min ao " + s(v) + " != predicted " + s(b.predicted); });
    c.expect(b.lo <= v && v <= b.hi, [&] {
      return "n=" + s(n) + ": min ao " + s(v) + " outside (" + s(b.hi / 2) + ", " + s(b.hi) +
             "] for k=" + s(b.k);
    });
  }
}

SimpleGraph random_graph(std::mt19937_64& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
  const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  std::bernoulli_distribution edge(p);
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

void solver_oracle(Checker& c, const Options& o) {
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.random_graphs; ++i) {
    const auto g = random_graph(rng);
    const auto fast = ao_exact(g, o.solver).value, slow = ao_brute(g, o.solver);
    c.expect(fast == slow, [&] {
      return "random graph #" + s(i) + " (n=" + s(g.size()) + "): exact " + s(fast) + " brute " +
             s(slow);
    });
  }
  for (std::size_t n = 0; n <= std::min<std::size_t>(o.max_n, 6); ++n)
    for (const Poset& p : en::enumerate_posets(n)) {
      const auto g = comparability_graph(p);
      const auto fast = ao_exact(g, o.solver).value, slow = ao_brute(g, o.solver);
      c.expect(fast == slow, [&] {
        return "poset " + en::canonical_key(p).hex() + ": exact " + s(fast) + " brute " + s(slow);
      });
    }
}

void check_graph_bounds(Checker& c, const SimpleGraph& g, std::size_t ao, const std::string& label) {
  const auto alpha = independence_number_brute(g), omega = clique_number_brute(g);
  c.expect(std::max(alpha, omega) <= ao && ao <= alpha * omega, [&] {
    return label + ": ao " + s(ao) + " alpha " + s(alpha) + " omega " + s(omega);
  });
}

void check_poset_bounds(Checker& c, const Poset& p, const std::string& label, const SolverConfig& cfg) {
  const auto g = comparability_graph(p);
  const auto ao = ao_exact(g, cfg).value;
  check_graph_bounds(c, g, ao, label);
  c.expect(width(p) == independence_number_brute(g) && height(p) == clique_number_brute(g),
           [&] { return label + ": width/height disagree with alpha/omega"; });
  c.expect(ao >= ceil_sqrt(p.size()), [&] { return label + ": ao below ceil(sqrt n)"; });
  const auto b = ao_bounds(p);
  c.expect(b.lo <= ao && ao <= b.hi, [&] { return label + ": ao outside ao_bounds"; });
}

void alpha_omega_bounds(Checker& c, const Options& o) {
  for (std::size_t n = 0; n <= std::min<std::size_t>(o.max_n, 6); ++n)
    for (const Poset& p : en::enumerate_posets(n))
      check_poset_bounds(c, p, "poset " + en::canonical_key(p).hex(), o.solver);
  for (std::size_t a = 1; a <= o.max_a; ++a)
    check_poset_bounds(c, *cons::lambda_extremal(a).poset, "lambda_extremal(" + s(a) + ")", o.solver);
  for (std::size_t a = 1; a <= std::min<std::size_t>(o.max_a, 6); ++a)
    check_poset_bounds(c, *cons::x_extremal(a).poset, "x_extremal(" + s(a) + ")", o.solver);
  for (std::size_t m = 0; m <= 4; ++m)
    check_poset_bounds(c, cons::boolean_lattice(m), "boolean_lattice(" + s(m) + ")", o.solver);
  for (std::size_t n = 1; n <= 16; ++n)
    check_poset_bounds(c, cons::multipartite(n), "multipartite(" + s(n) + ")", o.solver);
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.random_graphs; ++i) {
    const auto g = random_graph(rng);
    check_graph_bounds(c, g, ao_exact(g, o.solver).value, "random graph #" + s(i));
  }
}

void planar_example(Checker& c, const Options& o) {
  const auto one = ao_brute(cons::planar_c5_join(1), o.solver);
  c.expect(one == 3, [&] { return "ao_brute(one component) = " + s(one); });
  for (std::size_t copies = 0; copies <= 3; ++copies) {
    const auto v = ao_exact(cons::planar_c5_join(copies), o.solver).value;
    c.expect(v == 3 * copies, [&] { return s(copies) + " copies: ao " + s(v); });
  }
}

void structural_lemmas(Checker& c, const Options& o) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(o.max_n, 6); ++n)
    for (const Poset& p : en::enumerate_posets(n)) {
      const bool acyclic = is_acyclic(p), n_free = is_n_free(p);
      if (is_v_free(p))
        c.expect(acyclic && n_free,
                 [&] { return "V-free poset " + en::canonical_key(p).hex() + " not acyclic/N-free"; });
      if (acyclic && n_free && is_connected(p))
        c.expect(central_element(p).has_value(),
                 [&] { return "poset " + en::canonical_key(p).hex() + " has no central element"; });
    }
}

struct CriterionDef {
  const char* name;
  double budget;
  void (*run)(Checker&, const Options&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"lambda closed form equals recurrence", 1, [](Checker& c, const Options&) { formula_consistency(c); }},
    {"both X closed forms agree", 1, [](Checker& c, const Options&) { x_identity(c); }},
    {"X via maximization", 1, x_via_maximization},
    {"constructions match the exact solver", 60, constructions_vs_solver},
    {"boolean lattice value and witness", 30, boolean_lattice},
    {"min ao over all posets is ceil(sqrt n)", 300, all_posets_sqrt},
    {"min ao over acyclic posets: bracket and prediction", 600, acyclic_bracket},
    {"exact solver equals brute force", 300, solver_oracle},
    {"alpha/omega and sqrt bounds", 300, alpha_omega_bounds},
    {"C5 join components", 1, planar_example},
    {"V-free and central element lemmas", 300, structural_lemmas},
};

}  // namespace

CriterionResult run_criterion(int id, const Options& opts) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id " + std::to_string(id));
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.budget_seconds = def.budget;
  Checker c(r);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    def.run(c, opts);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.budget_seconds)
    r.failures.push_back("took " + std::to_string(r.seconds) + " s, budget " +
                         std::to_string(r.budget_seconds) + " s");
  r.pass = r.failures.empty();
  r.summary = std::to_string(c.checks() - c.failed()) + "/" + std::to_string(c.checks()) + " checks";
  return r;
}

std::vector<CriterionResult> run_all(const Options& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

std::string format(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  std::ostringstream out;
  out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
      << r.summary << ", " << time << ")";
  for (const auto& f : r.failures) out << "\n    " << f;
  return out.str();
}

}  // namespace aoposet::battery

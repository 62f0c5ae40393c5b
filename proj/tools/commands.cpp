#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "aoposet/battery.hpp"
#include "aoposet/constructions.hpp"
#include "aoposet/enumeration.hpp"
#include "aoposet/errors.hpp"
#include "aoposet/extremal.hpp"
#include "aoposet/io.hpp"
#include "aoposet/structure.hpp"

namespace aoposet::cli {

namespace {

namespace cons = aoposet::constructions;

// Generated objects above this size are written without the solver self-check.
constexpr std::size_t kSelfCheckLimit = 32;

const char* b(bool v) { return v ? "true" : "false"; }

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string witness_text(const std::optional<ShapeWitness>& w) {
  return w ? "(" + join(w->elements) + ")" : "none";
}

struct AnalyzeArgs {
  std::string path;
  bool brute = false;
  bool witness = false;
  std::string dot;
  SolverConfig cfg;
};

void analyze_poset(const Poset& p, const AnalyzeArgs& a, std::ostream& out) {
  std::size_t ao = 0;
  ChainFamily family;
  if (a.brute) {
    ao = ao_brute(comparability_graph(p), a.cfg);
  } else {
    auto [res, fam] = ao_poset(p, a.cfg);
    ao = res.value;
    family = std::move(fam);
  }
  const auto cycle = find_cover_cycle(p);
  const auto v = find_v_shape(p);
  const auto n = find_n_shape(p);
  const auto central = central_element(p);
  const auto bounds = ao_bounds(p);
  out << "n=" << p.size() << " ao=" << ao << " height=" << height(p) << " width=" << width(p)
      << " acyclic=" << b(!cycle) << '\n';
  out << "bounds: " << bounds.lo << " <= ao <= " << bounds.hi << '\n';
  out << "v_free=" << b(!v);
  if (v) out << " witness=" << witness_text(v);
  out << '\n' << "n_free=" << b(!n);
  if (n) out << " witness=" << witness_text(n);
  out << '\n' << "connected=" << b(is_connected(p)) << '\n';
  out << "central=" << (central ? std::to_string(*central) : "none") << '\n';
  if (a.witness) {
    if (cycle) out << "cover_cycle=" << witness_text(cycle) << '\n';
    if (a.brute) {
      out << "chains: (not computed with --brute)\n";
    } else {
      out << "chains:";
      for (const auto& c : family.chains) out << " [" << join(c, " ") << ']';
      out << '\n';
    }
  }
  if (!a.dot.empty()) {
    std::ofstream f(a.dot);
    if (!f) throw ParseError("cannot write " + a.dot, 0);
    io::write_dot(f, p);
  }
}

void analyze_graph(const SimpleGraph& g, const AnalyzeArgs& a, std::ostream& out) {
  AoResult res;
  if (a.brute)
    res.value = ao_brute(g, a.cfg);
  else
    res = ao_exact(g, a.cfg);
  out << "n=" << g.size() << " edges=" << g.edge_count() << " ao=" << res.value;
  if (g.size() <= 64)
    out << " alpha=" << independence_number_brute(g) << " omega=" << clique_number_brute(g);
  out << '\n';
  if (a.witness && !a.brute) out << "deleted: " << join(res.deletions, " ") << '\n';
  if (!a.dot.empty()) throw ParseError("--dot needs a poset file", 0);
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const auto obj = io::read_file(a.path);
  if (const auto* p = std::get_if<Poset>(&obj))
    analyze_poset(*p, a, out);
  else
    analyze_graph(std::get<SimpleGraph>(obj), a, out);
  return kOk;
}

cons::ConstructionReport make_report(const std::string& kind, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("gen " + kind + " takes " + std::to_string(k) + " parameter(s)");
  };
  cons::ConstructionReport r;
  if (kind == "lambda") {
    need(1);
    return cons::lambda_extremal(params[0]);
  }
  if (kind == "lambda-h") {
    need(2);
    return cons::lambda_h_extremal(params[0], params[1]);
  }
  if (kind == "x") {
    need(1);
    return cons::x_extremal(params[0]);
  }
  need(1);
  const std::size_t m = params[0];
  r.kind = kind;
  if (kind == "boolean") {
    r.poset = cons::boolean_lattice(m);
    r.claimed_size = r.poset->size();
    r.claimed_ao = m == 0 ? 1 : 2 * cons::binomial(m - 1, (m - 1) / 2);
    r.claimed_height = m + 1;
  } else if (kind == "multipartite") {
    r.poset = cons::multipartite(m);
    r.claimed_size = m;
    r.claimed_ao = ceil_sqrt(m);
  } else if (kind == "grid") {
    r.graph = cons::grid_cliques(m);
    r.claimed_size = m * m;
    r.claimed_ao = m * m;
  } else if (kind == "planar-c5") {
    r.graph = cons::planar_c5_join(m);
    r.claimed_size = 7 * m;
    r.claimed_ao = 3 * m;
  } else {
    throw std::invalid_argument("unknown kind " + kind);
  }
  return r;
}

int cmd_gen(const std::string& kind, const std::vector<std::size_t>& params,
            const std::string& out_path, bool no_check, std::ostream& out) {
  const auto r = make_report(kind, params);
  std::ostringstream claims;
  claims << "size=" << r.claimed_size << " ao=" << r.claimed_ao;
  if (r.claimed_height) claims << " height=" << *r.claimed_height;
  for (auto [name, v] : {std::pair{"v_free", r.v_free}, {"n_free", r.n_free},
                         {"acyclic", r.acyclic}, {"connected", r.connected}})
    if (v) claims << ' ' << name << '=' << b(*v);
  if (r.central) claims << " central=" << *r.central;
  if (r.conjectural_size) claims << " conjectural_size=true";

  std::vector<std::string> failures;
  std::string check = "ok";
  if (no_check) {
    check = "skipped";
  } else if (r.size() > kSelfCheckLimit) {
    check = "skipped (n > " + std::to_string(kSelfCheckLimit) + ")";
  } else {
    failures = cons::verify(r);
    if (!failures.empty()) check = "FAILED";
  }

  std::ostringstream file;
  if (r.poset)
    io::write_poset(file, *r.poset);
  else
    io::write_graph(file, *r.graph);

  // Without --out the object goes to stdout with the report as comments, so
  // the output is itself a loadable file.
  const std::string prefix = out_path.empty() ? "# " : "";
  out << prefix << claims.str() << '\n';
  out << prefix << "self-check: " << check << '\n';
  for (const auto& f : failures) out << prefix << "  " << f << '\n';
  if (out_path.empty()) {
    out << file.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot write " + out_path, 0);
    f << file.str();
  }
  return failures.empty() ? kOk : kCheckFailed;
}

int cmd_table(const std::string& kind, std::size_t max, bool csv, std::ostream& out) {
  using namespace extremal;
  if (kind == "lambda" || kind == "x") {
    const bool lam = kind == "lambda";
    if (csv) out << (lam ? "a,lambda\n" : "a,x,conjectural_construction\n");
    for (Count a = 1; a <= max; ++a) {
      const Count v = lam ? lambda_closed(a) : x_closed(a);
      if (csv) {
        out << a << ',' << v;
        if (!lam) out << ',' << b(a % 2 == 1 && a > 1);
        out << '\n';
      } else {
        out << "a=" << std::left << std::setw(6) << a << (lam ? "lambda=" : "x=") << v << '\n';
      }
    }
    return kOk;
  }
  if (kind == "aotn") {
    if (csv) out << "n,k,lo,hi,predicted,exact\n";
    for (Count n = 1; n <= max; ++n) {
      const auto t = ao_Tn_bounds(n);
      if (csv)
        out << n << ',' << t.k << ',' << t.lo << ',' << t.hi << ',' << t.predicted << ','
            << b(t.exact) << '\n';
      else
        out << "n=" << n << " k=" << t.k << " lo=" << t.lo << " hi=" << t.hi
            << " predicted=" << t.predicted << (t.exact ? "" : " (conjectural)") << '\n';
    }
    return kOk;
  }
  throw std::invalid_argument("unknown table " + kind);
}

int cmd_verify(std::size_t max_n, std::size_t max_a, std::ostream& out) {
  battery::Options o;
  o.max_n = max_n;
  o.max_a = max_a;
  bool all = true;
  for (int id = 1; id <= battery::kCriterionCount; ++id) {
    const auto r = battery::run_criterion(id, o);
    out << battery::format(r) << std::endl;
    all = all && r.pass;
  }
  return all ? kOk : kCheckFailed;
}

int cmd_golden(std::size_t n, const std::string& out_path, std::ostream& out) {
  const std::string text = enumeration::golden_csv(n);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot write " + out_path, 0);
    f << text;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Largest induced cluster subgraphs of comparability graphs of posets"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Report ao, height, width and structure of a poset or graph file");
  an->add_option("path", analyze.path, "poset or graph file")->required();
  an->add_flag("--brute", analyze.brute, "use exhaustive subset search");
  an->add_flag("--witness", analyze.witness, "print the chain family / deletion set");
  an->add_option("--dot", analyze.dot, "write the Hasse diagram as DOT");
  an->add_option("--node-limit", analyze.cfg.node_limit, "branch-and-bound node budget")
      ->capture_default_str();

  std::string gen_kind, gen_out;
  std::vector<std::size_t> gen_params;
  bool no_check = false;
  auto* gen = app.add_subcommand("gen", "Generate a construction and check its claims");
  gen->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"lambda", "lambda-h", "x", "boolean", "multipartite", "grid", "planar-c5"}));
  gen->add_option("params", gen_params)->required();
  gen->add_option("--out", gen_out, "output file (default: stdout)");
  gen->add_flag("--no-check", no_check, "skip the solver self-check");

  std::string table_kind;
  std::size_t table_max = 0;
  bool csv = false;
  auto* table = app.add_subcommand("table", "Tabulate lambda, x or the ao(T_n) bracket");
  table->add_option("kind", table_kind)->required()->check(CLI::IsMember({"lambda", "x", "aotn"}));
  table->add_option("--max", table_max)->required();
  table->add_flag("--csv", csv);

  std::size_t max_n = 7, max_a = 8;
  auto* verify = app.add_subcommand("verify", "Run the verification battery");
  verify->add_option("--max-n", max_n, "largest enumerated poset size")->capture_default_str();
  verify->add_option("--max-a", max_a, "largest lambda construction")->capture_default_str();

  std::size_t golden_n = 0;
  std::string golden_out;
  auto* golden = app.add_subcommand("golden", "Emit the golden CSV for all n-element posets");
  golden->add_option("--n", golden_n)->required();
  golden->add_option("--out", golden_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*an) return cmd_analyze(analyze, out);
    if (*gen) return cmd_gen(gen_kind, gen_params, gen_out, no_check, out);
    if (*table) return cmd_table(table_kind, table_max, csv, out);
    if (*verify) return cmd_verify(max_n, max_a, out);
    if (*golden) return cmd_golden(golden_n, golden_out, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const CycleError& e) {
    err << "cycle: " << e.what() << '\n';
    return kCycle;
  } catch (const NodeLimitExceeded& e) {
    err << "node limit: " << e.what() << '\n';
    return kNodeLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace aoposet::cli

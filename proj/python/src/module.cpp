#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "aoposet/battery.hpp"
#include "aoposet/constructions.hpp"
#include "aoposet/enumeration.hpp"
#include "aoposet/errors.hpp"
#include "aoposet/extremal.hpp"
#include "aoposet/io.hpp"
#include "aoposet/structure.hpp"

namespace py = pybind11;
using namespace aoposet;

namespace {

py::object witness(const std::optional<ShapeWitness>& w) {
  if (!w) return py::none();
  return py::cast(w->elements);
}

py::dict report_dict(const constructions::ConstructionReport& r) {
  py::dict d;
  d["kind"] = r.kind;
  if (r.poset) d["poset"] = *r.poset;
  if (r.graph) d["edges"] = r.graph->edges();
  d["claimed_size"] = r.claimed_size;
  d["claimed_ao"] = r.claimed_ao;
  d["claimed_height"] = r.claimed_height;
  d["v_free"] = r.v_free;
  d["n_free"] = r.n_free;
  d["acyclic"] = r.acyclic;
  d["connected"] = r.connected;
  d["central"] = r.central;
  d["conjectural_size"] = r.conjectural_size;
  d["failures"] = constructions::verify(r);
  return d;
}

SimpleGraph graph_from(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return SimpleGraph(n, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Largest induced cluster subgraphs of comparability graphs of posets";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<CycleError>(m, "CycleError", base.ptr());
  py::register_exception<NodeLimitExceeded>(m, "NodeLimitExceeded", base.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", base.ptr());
  py::register_exception<OutOfSpecifiedRange>(m, "OutOfSpecifiedRange", base.ptr());
  py::register_exception<Unspecified>(m, "Unspecified", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Poset>(m, "Poset")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Element, Element>>& pairs) {
             return Poset::from_cover_relations(n, pairs);
           }),
           py::arg("n"), py::arg("pairs") = std::vector<std::pair<Element, Element>>{},
           "Transitive closure of (upper, lower) pairs.")
      .def_static("chain", &Poset::chain)
      .def_static("antichain", &Poset::antichain)
      .def_static("parse", [](const std::string& text) {
        std::istringstream in(text);
        return io::read_poset(in);
      })
      .def("__len__", &Poset::size)
      .def("less", &Poset::less)
      .def("comparable", &Poset::comparable)
      .def("covers", [](const Poset& p) {
        std::vector<std::pair<Element, Element>> out;
        for (auto c : cover_pairs(p)) out.emplace_back(c.upper, c.lower);
        return out;
      })
      .def("comparability_edges", [](const Poset& p) { return comparability_graph(p).edges(); })
      .def("to_text", [](const Poset& p) {
        std::ostringstream out;
        io::write_poset(out, p);
        return out.str();
      })
      .def("to_dot", [](const Poset& p) {
        std::ostringstream out;
        io::write_dot(out, p);
        return out.str();
      })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__", [](const Poset& p) { return "<Poset n=" + std::to_string(p.size()) + ">"; });

  m.def("height", &height);
  m.def("width", &width);
  m.def("is_connected", &is_connected);
  m.def("invert", &invert);
  m.def("disjoint_union", py::overload_cast<const Poset&, const Poset&>(&disjoint_union));

  m.def("find_v_shape", [](const Poset& p) { return witness(find_v_shape(p)); });
  m.def("find_n_shape", [](const Poset& p) { return witness(find_n_shape(p)); });
  m.def("find_cover_cycle", [](const Poset& p) { return witness(find_cover_cycle(p)); });
  m.def("central_element", &central_element);
  m.def("is_acyclic", &is_acyclic);
  m.def("is_v_free", &is_v_free);
  m.def("is_n_free", &is_n_free);

  m.def(
      "ao",
      [](const Poset& p, std::uint64_t node_limit) {
        SolverConfig cfg;
        cfg.node_limit = node_limit;
        auto [res, fam] = ao_poset(p, cfg);
        return py::make_tuple(res.value, fam.chains);
      },
      py::arg("poset"), py::arg("node_limit") = SolverConfig{}.node_limit,
      "(ao, chains) for a poset.");
  m.def(
      "ao_graph",
      [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, bool brute) -> py::tuple {
        const auto g = graph_from(n, edges);
        if (brute) return py::make_tuple(ao_brute(g), py::none());
        auto r = ao_exact(g);
        return py::make_tuple(r.value, r.witness);
      },
      py::arg("n"), py::arg("edges"), py::arg("brute") = false,
      "(ao, kept vertices) for a graph; kept is None with brute=True.");
  m.def("ao_bounds", [](const Poset& p) {
    const auto b = ao_bounds(p);
    return py::make_tuple(b.lo, b.hi);
  });

  auto ex = m.def_submodule("extremal");
  ex.def("lambda_closed", &extremal::lambda_closed);
  ex.def("lambda_rec", &extremal::lambda_rec);
  ex.def("lambda_h", &extremal::lambda_h);
  ex.def("x_closed", &extremal::x_closed);
  ex.def("x_closed_identity", &extremal::x_closed_identity);
  ex.def("x_via_max", [](extremal::Count a, const std::vector<std::tuple<extremal::Count, extremal::Count, extremal::Count>>& confirmed) {
    std::vector<extremal::ConfirmedLambdaH> c;
    for (auto [ca, ch, cv] : confirmed) c.push_back({ca, ch, cv});
    return extremal::x_via_max(a, c);
  }, py::arg("a"), py::arg("confirmed") = std::vector<std::tuple<extremal::Count, extremal::Count, extremal::Count>>{});
  ex.def("ao_Tn_bounds", [](extremal::Count n) {
    const auto b = extremal::ao_Tn_bounds(n);
    py::dict d;
    d["n"] = b.n;
    d["k"] = b.k;
    d["lo"] = b.lo;
    d["hi"] = b.hi;
    d["predicted"] = b.predicted;
    d["exact"] = b.exact;
    return d;
  });
  ex.def("asymptotic_check", &extremal::asymptotic_check);

  auto co = m.def_submodule("constructions");
  co.def("lambda_extremal", [](std::size_t a) { return report_dict(constructions::lambda_extremal(a)); });
  co.def("lambda_h_extremal",
         [](std::size_t a, std::size_t h) { return report_dict(constructions::lambda_h_extremal(a, h)); });
  co.def("x_extremal", [](std::size_t a) { return report_dict(constructions::x_extremal(a)); });
  co.def("boolean_lattice", &constructions::boolean_lattice);
  co.def("boolean_witness", [](std::size_t m) { return constructions::boolean_witness(m).chains; });
  co.def("multipartite", &constructions::multipartite);
  co.def("grid_cliques", [](std::size_t k) {
    const auto g = constructions::grid_cliques(k);
    return py::make_tuple(g.size(), g.edges());
  });
  co.def("planar_c5_join", [](std::size_t c) {
    const auto g = constructions::planar_c5_join(c);
    return py::make_tuple(g.size(), g.edges());
  });

  auto en = m.def_submodule("enumeration");
  en.def("enumerate_posets", [](std::size_t n) { return enumeration::enumerate_posets(n); });
  en.def("enumerate_acyclic", &enumeration::enumerate_acyclic);
  en.def("canonical_key", [](const Poset& p) { return enumeration::canonical_key(p).hex(); });
  en.def("min_ao", [](const std::vector<Poset>& family) {
    return enumeration::min_ao(family).first;
  });
  en.def("oracle_lambda_h", [](std::size_t a, std::size_t h, std::size_t n_cap) {
    return enumeration::oracle_lambda_h(a, h, n_cap);
  });
  en.def("golden_csv", [](std::size_t n) { return enumeration::golden_csv(n); });

  m.def("run_criterion", [](int id) {
    const auto r = battery::run_criterion(id);
    py::dict d;
    d["id"] = r.id;
    d["name"] = r.name;
    d["passed"] = r.pass;
    d["seconds"] = r.seconds;
    d["failures"] = r.failures;
    return d;
  });
}

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperlag/compression.hpp"
#include "hyperlag/io.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/optimizer.hpp"
#include "hyperlag/theorems.hpp"

namespace py = pybind11;
using namespace hyperlag;

namespace {

py::object to_python(const io::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

OptimizerSettings settings(int restarts, std::uint64_t seed, double tol, int max_iters,
                           int threads) {
  OptimizerSettings s;
  s.restarts = restarts;
  s.seed = seed;
  s.tol = tol;
  s.max_iters = max_iters;
  s.threads = threads;
  return s;
}

EdgeMask mask_of(const Hypergraph& h, const std::vector<int>& labels) {
  return mask_from_labels(labels, h.n());
}

}  // namespace

PYBIND11_MODULE(_hyperlag, m) {
  m.doc() = "Lagrangians of non-uniform hypergraphs";

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](int n, const std::vector<std::vector<int>>& edges) {
             return Hypergraph::build(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Hypergraph::n)
      .def_property_readonly("edges", &Hypergraph::edge_lists)
      .def_property_readonly("edge_types", &Hypergraph::edge_types)
      .def("edge_count", &Hypergraph::edge_count, py::arg("r"))
      .def("has_edge",
           [](const Hypergraph& h, const std::vector<int>& e) { return h.has_edge(mask_of(h, e)); })
      .def("to_text", [](const Hypergraph& h) { return io::format_graph_text(h); })
      .def(py::self == py::self)
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(n=" + std::to_string(h.n()) +
               ", edges=" + std::to_string(h.total_edges()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return io::parse_graph(text); },
        py::arg("text"));
  m.def("complete", &complete, py::arg("t"), py::arg("types"));
  m.def("max_complete_subgraph", [](const Hypergraph& h, const std::set<int>& types) {
    const auto res = max_complete_subgraph_order(h, types);
    return py::make_tuple(res.order, res.witness.labels());
  }, py::arg("h"), py::arg("types"));

  m.def("evaluate", [](const Hypergraph& h, const std::vector<double>& x) {
    return eval(h, Weighting::from_user(x));
  }, py::arg("h"), py::arg("x"));
  m.def("evaluate_uniform", [](const Hypergraph& h, const std::vector<double>& x) {
    return eval_uniform(h, Weighting::from_user(x));
  }, py::arg("h"), py::arg("x"));
  m.def("gradient", [](const Hypergraph& h, const std::vector<double>& x) {
    return gradient(h, Weighting::from_user(x)).g;
  }, py::arg("h"), py::arg("x"));
  m.def("closed_form", &closed_form, py::arg("t"), py::arg("types"));
  m.def("threshold", [](int r) {
    return py::int_(py::str(threshold(r).str()));
  }, py::arg("r"));

  m.def("maximize",
        [](const Hypergraph& h, int restarts, std::uint64_t seed, double tol, int max_iters,
           int threads) {
          const auto res = maximize(h, settings(restarts, seed, tol, max_iters, threads));
          py::dict d;
          d["value"] = res.value;
          d["uniform_value"] = res.uniform_value ? py::cast(*res.uniform_value) : py::none();
          d["x"] = std::vector<double>(res.x.values().begin(), res.x.values().end());
          d["support"] = res.support.labels();
          d["kkt_residual"] = res.kkt_residual;
          d["cover_violations"] = res.cover_violations;
          d["restarts_used"] = res.restarts_used;
          return d;
        },
        py::arg("h"), py::arg("restarts") = 100, py::arg("seed") = 0, py::arg("tol") = 1e-9,
        py::arg("max_iters") = 10000, py::arg("threads") = 0);
  m.def("grid_oracle", [](const Hypergraph& h, int grid_m) {
    return to_python(io::to_json(grid_oracle(h, grid_m)));
  }, py::arg("h"), py::arg("m") = 50);

  m.def("compress_set", &compress_set, py::arg("h"), py::arg("i"), py::arg("j"));
  m.def("left_compress", [](const Hypergraph& h) {
    auto res = left_compress(h);
    return py::make_tuple(res.graph, res.trace.steps);
  }, py::arg("h"));
  m.def("is_left_compressed", &is_left_compressed, py::arg("h"));

  m.def("verify",
        [](const std::string& theorem, const Hypergraph& h, bool force, int restarts,
           std::uint64_t seed) {
          const auto id = parse_theorem_id(theorem);
          if (!id) throw py::value_error("unknown theorem '" + theorem + "'");
          VerifyOptions opts;
          opts.optimizer = settings(restarts, seed, 1e-9, 10000, 0);
          opts.force = force;
          return to_python(io::to_json(verify(*id, h, opts)));
        },
        py::arg("theorem"), py::arg("h"), py::arg("force") = false, py::arg("restarts") = 100,
        py::arg("seed") = 0);
  m.def("counterexample",
        [](const std::string& name, std::optional<int> s, std::optional<int> t,
           std::optional<int> n) {
          const auto id = parse_construction_id(name);
          if (!id) throw py::value_error("unknown construction '" + name + "'");
          return to_python(io::to_json(build_counterexample(*id, {s, t, n})));
        },
        py::arg("construction"), py::arg("s") = py::none(), py::arg("t") = py::none(),
        py::arg("n") = py::none());
  m.def("catalog", [] {
    io::json arr = io::json::array();
    for (const auto& e : catalog()) arr.push_back(io::to_json(e));
    return to_python(arr);
  });
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "glauber/dynamics.hpp"
#include "glauber/errors.hpp"
#include "glauber/json_io.hpp"
#include "glauber/verification.hpp"
#include "glauber/weight_model.hpp"
#include "glauber/width.hpp"

namespace py = pybind11;
using namespace glauber;
using nlohmann::json;

namespace {

// Models cross the boundary as JSON text; the Python package converts dicts.
WeightModel model_of(const std::string& spec) {
  json j;
  try {
    j = json::parse(spec);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("model is not valid JSON: ") + e.what());
  }
  return model_from_json(j);
}

Ordering ordering_of(const Graph& g, Kind kind, const std::string& how) {
  if (how == "exact") return optimal_ordering(g, kind);
  if (how == "greedy") return greedy_ordering(g, kind);
  throw std::invalid_argument("ordering must be \"exact\" or \"greedy\"");
}

Kind kind_of(const std::string& name) {
  if (name == "edge") return Kind::Edge;
  if (name == "vertex") return Kind::Vertex;
  throw std::invalid_argument("kind must be \"edge\" or \"vertex\"");
}

}  // namespace

PYBIND11_MODULE(_glauber, m) {
  m.doc() = "Single-flip Glauber dynamics for subset-expansion graph polynomials";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
             std::vector<Edge> list;
             for (auto [u, v] : edges) list.push_back({u, v});
             return Graph(n, std::move(list));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (auto e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("to_text", &Graph::to_text)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("parse_graph", py::overload_cast<const std::string&>(&parse_graph), py::arg("text"));
  m.def("load_graph", &load_graph, py::arg("path"));

  m.def("normalise_model", [](const std::string& spec) { return to_json(model_of(spec)).dump(); });
  m.def("lambda_of", [](const std::string& spec) {
    const auto model = model_of(spec);
    return py::make_tuple(model.lambda(), model.lambda_hat());
  });

  m.def(
      "log_weight",
      [](const Graph& g, const std::string& spec, const std::vector<std::size_t>& members) {
        const auto model = model_of(spec);
        return log_weight(model, g, Subset::from_indices(model.kind(), g.universe(model.kind()), members));
      },
      py::arg("graph"), py::arg("model"), py::arg("members"));

  m.def(
      "log_partition", [](const Graph& g, const std::string& spec) { return exact_partition_log(model_of(spec), g); },
      py::arg("graph"), py::arg("model"));

  m.def(
      "stationary", [](const Graph& g, const std::string& spec) { return stationary_distribution(model_of(spec), g); },
      py::arg("graph"), py::arg("model"));

  m.def(
      "sample",
      [](const Graph& g, const std::string& spec, std::size_t steps, std::uint64_t seed,
         std::optional<std::size_t> burn_in, std::size_t thin) {
        ChainConfig cfg{model_of(spec), g, seed, std::nullopt, steps, burn_in, thin};
        Trace trace;
        {
          py::gil_scoped_release release;
          trace = run(cfg);
        }
        py::list samples;
        for (const auto& s : trace.samples) samples.append(py::make_tuple(s.step, s.state.to_hex(), s.log_weight));
        py::dict out;
        out["samples"] = samples;
        out["acceptance_rate"] = trace.acceptance_rate;
        out["final"] = trace.final.to_hex();
        return out;
      },
      py::arg("graph"), py::arg("model"), py::arg("steps"), py::arg("seed") = 0, py::arg("burn_in") = py::none(),
      py::arg("thin") = 1);

  m.def(
      "width",
      [](const Graph& g, const std::string& kind, const std::string& how) {
        return to_json(ordering_of(g, kind_of(kind), how)).dump();
      },
      py::arg("graph"), py::arg("kind") = "edge", py::arg("ordering") = "exact");

  m.def(
      "congestion",
      [](const Graph& g, const std::string& spec, const std::string& how) {
        const auto model = model_of(spec);
        const auto o = ordering_of(g, model.kind(), how);
        return json{{"ordering", to_json(o)},
                    {"congestion", to_json(congestion(model, g, o))},
                    {"lemma", to_json(lemma_ratio_max(model, g, o))}}
            .dump();
      },
      py::arg("graph"), py::arg("model"), py::arg("ordering") = "exact");

  m.def(
      "mixing",
      [](const Graph& g, const std::string& spec, double epsilon, const std::string& how) {
        const auto model = model_of(spec);
        const auto o = ordering_of(g, model.kind(), how);
        const auto c = congestion(model, g, o);
        return json{{"congestion", to_json(c)}, {"mixing", to_json(exact_mixing_time(model, g, epsilon, c), true)}}
            .dump();
      },
      py::arg("graph"), py::arg("model"), py::arg("epsilon") = 0.01, py::arg("ordering") = "exact");

  m.def(
      "check_multiplicativity",
      [](const Graph& g, const std::string& spec, std::optional<double> lambda) {
        const auto model = model_of(spec);
        return to_json(check_multiplicativity(model, g, lambda.value_or(model.lambda()))).dump();
      },
      py::arg("graph"), py::arg("model"), py::arg("lam") = py::none());
}

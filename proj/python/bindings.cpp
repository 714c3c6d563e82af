#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <tuple>
#include <vector>

#include "randbf/bench/dimacs.hpp"
#include "randbf/engines.hpp"
#include "randbf/generators.hpp"
#include "randbf/negcycle.hpp"
#include "randbf/oracle.hpp"
#include "randbf/ordering.hpp"
#include "randbf/partition.hpp"
#include "randbf/permstats.hpp"

namespace py = pybind11;
using namespace randbf;

namespace {

// Unreached vertices become None on the Python side.
std::vector<std::optional<double>> distances(const std::vector<Weight>& dist) {
  std::vector<std::optional<double>> out;
  out.reserve(dist.size());
  for (Weight d : dist) out.push_back(d == kUnreached ? std::nullopt : std::optional<double>(d));
  return out;
}

std::vector<std::optional<Vertex>> parents(const std::vector<Vertex>& parent) {
  std::vector<std::optional<Vertex>> out;
  out.reserve(parent.size());
  for (Vertex p : parent) out.push_back(p == kNoVertex ? std::nullopt : std::optional<Vertex>(p));
  return out;
}

py::dict result_dict(const SsspState& state, const RunStats& stats) {
  py::dict d;
  d["dist"] = distances(state.dist);
  d["parent"] = parents(state.parent);
  d["relax_calls"] = stats.relax_calls;
  d["improvements"] = stats.improvements;
  d["iterations"] = stats.iterations;
  d["terminated_early"] = stats.terminated_early;
  d["iteration_cap_hit"] = stats.iteration_cap_hit;
  return d;
}

py::dict verdict_dict(const CycleVerdict& v) {
  py::dict d;
  d["found"] = v.found;
  d["cycle"] = v.cycle;
  d["cycle_weight"] = v.cycle_weight;
  d["iterations_used"] = v.iterations_used;
  d["relax_calls_used"] = v.relax_calls_used;
  return d;
}

Graph make_graph(std::size_t n, const std::vector<std::tuple<Vertex, Vertex, double>>& edges,
                 Vertex source) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v, w] : edges) list.push_back({u, v, w});
  return Graph(n, std::move(list), source);
}

}  // namespace

PYBIND11_MODULE(_randbf, m) {
  m.doc() = "Instrumented Bellman-Ford engines with exact relaxation counts";
  m.attr("__version__") = "0.1.0";

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"), py::arg("source") = 0,
           "Graph(n, [(tail, head, weight), ...], source=0)")
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def_property_readonly("source", &Graph::source)
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::tuple<Vertex, Vertex, double>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.tail, e.head, e.weight);
        return out;
      });

  py::class_<Ordering>(m, "Ordering")
      .def_static("identity", &Ordering::identity, py::arg("n"), py::arg("source") = 0)
      .def_static("from_ranks", &Ordering::from_ranks, py::arg("ranks"), py::arg("source") = 0)
      .def_property_readonly("ranks", [](const Ordering& o) {
        return std::vector<Vertex>(o.ranks().begin(), o.ranks().end());
      })
      .def_property_readonly("sequence", [](const Ordering& o) {
        return std::vector<Vertex>(o.sequence().begin(), o.sequence().end());
      });

  m.def("random_ordering", py::overload_cast<const Graph&, std::uint64_t>(&random_ordering),
        py::arg("graph"), py::arg("seed"));
  m.def("partition_edges", [](const Graph& g, const Ordering& ord) {
    const EdgePartition p = partition_edges(g, ord);
    const auto as_list = [](std::span<const Edge> edges) {
      std::vector<std::tuple<Vertex, Vertex, double>> out;
      for (const Edge& e : edges) out.emplace_back(e.tail, e.head, e.weight);
      return out;
    };
    return py::make_tuple(as_list(p.plus()), as_list(p.minus()), as_list(p.loops()));
  });

  m.def("run_basic", [](const Graph& g, bool strict) {
    const SsspResult r = run_basic(g, {strict, {}});
    return result_dict(r.state, r.stats);
  }, py::arg("graph"), py::arg("strict_count") = false);
  m.def("run_adaptive", [](const Graph& g) {
    const SsspResult r = run_adaptive(g);
    return result_dict(r.state, r.stats);
  });
  m.def("run_yen", [](const Graph& g, const Ordering& ord) {
    const SsspResult r = run_yen(g, ord);
    return result_dict(r.state, r.stats);
  });
  m.def("run_randomized", [](const Graph& g, std::uint64_t seed) {
    const RandomizedResult r = run_randomized(g, seed);
    py::dict d = result_dict(r.state, r.stats);
    d["ranks"] = std::vector<Vertex>(r.ordering.ranks().begin(), r.ordering.ranks().end());
    return d;
  }, py::arg("graph"), py::arg("seed"));

  m.def("run_with_detection", [](const Graph& g, std::uint64_t seed, double c) {
    const DetectionResult r = run_with_detection(g, seed, {c, false});
    py::dict d = result_dict(r.state, r.stats);
    d["verdict"] = verdict_dict(r.verdict);
    d["threshold_fallback"] = r.threshold_fallback;
    return d;
  }, py::arg("graph"), py::arg("seed"), py::arg("c") = 2.0);
  m.def("monte_carlo_dense_detect", [](const Graph& g, std::uint64_t seed, double c) {
    const MonteCarloResult r = monte_carlo_dense_detect(g, seed, c);
    py::dict d = result_dict(r.state, r.stats);
    d["verdict"] = verdict_dict(r.verdict);
    d["budget"] = r.budget;
    return d;
  }, py::arg("graph"), py::arg("seed"), py::arg("c") = 2.0);
  m.def("detect_cycle_in_parent_graph", [](const std::vector<std::optional<Vertex>>& parent) {
    std::vector<Vertex> raw;
    for (const auto& p : parent) raw.push_back(p.value_or(kNoVertex));
    return detect_cycle_in_parent_graph(raw);
  });
  m.def("iteration_threshold", &iteration_threshold, py::arg("n"), py::arg("c"));
  m.def("dense_relaxation_budget", &dense_relaxation_budget, py::arg("n"), py::arg("c"));

  m.def("count_local_minima", [](const std::vector<double>& values) {
    return count_local_minima(values);
  });
  m.def("local_minima_tail_threshold", &local_minima_tail_threshold, py::arg("n"), py::arg("c"));
  m.def("alternation_count", [](const std::vector<Vertex>& path, const Ordering& ord) {
    return alternation_count(path, ord);
  });

  m.def("worst_case_path", &worst_case_path, py::arg("n"));
  m.def("complete_worst_case", &complete_worst_case, py::arg("n"),
        py::arg("off_path_weight") = std::nullopt);
  m.def("adversarial_ordering", &adversarial_ordering, py::arg("n"));
  m.def("random_graph", [](const std::string& kind, std::size_t n, std::size_t m_edges,
                           std::int64_t wmin, std::int64_t wmax, std::uint64_t seed,
                           bool reachable, bool negative_cycle_free) {
    const auto parsed = parse_generator_kind(kind);
    if (!parsed) throw py::value_error("unknown generator kind " + kind);
    GeneratorSpec spec;
    spec.kind = *parsed;
    spec.n = n;
    spec.m = m_edges;
    spec.weight_min = wmin;
    spec.weight_max = wmax;
    spec.seed = seed;
    spec.ensure_reachable = reachable;
    spec.negative_cycle_free = negative_cycle_free;
    return generate(spec);
  }, py::arg("kind"), py::arg("n"), py::arg("m") = 0, py::arg("wmin") = -3, py::arg("wmax") = 7,
     py::arg("seed") = 0, py::arg("reachable") = false, py::arg("negative_cycle_free") = false);

  m.def("oracle_distances", [](const Graph& g) {
    const oracle::OracleResult r = oracle::floyd_warshall(g);
    return py::make_tuple(distances(r.distances_from_source()), r.has_reachable_negative_cycle);
  });

  m.def("load_dimacs", &bench::load_dimacs, py::arg("path"), py::arg("source") = 1);

  py::register_exception<bench::DimacsError>(m, "DimacsError", PyExc_ValueError);
  py::register_exception<DetectionDefect>(m, "DetectionDefect", PyExc_RuntimeError);
}

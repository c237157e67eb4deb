// Copyright 2026 The Multiplicity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "multiplicity/bound_lab.hpp"
#include "multiplicity/cli.hpp"
#include "multiplicity/combinatorics.hpp"
#include "multiplicity/constructions.hpp"
#include "multiplicity/convex_tour.hpp"
#include "multiplicity/enumeration.hpp"
#include "multiplicity/errors.hpp"
#include "multiplicity/extremal.hpp"
#include "multiplicity/pointset_io.hpp"

namespace py = pybind11;
using namespace multiplicity;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

std::string coord(py::handle h) {
  if (py::isinstance<py::int_>(h)) return py::str(h);
  return h.cast<std::string>();
}

PointSet make_exact(const std::vector<std::pair<py::object, py::object>>& pts) {
  std::vector<Point> points;
  for (const auto& [x, y] : pts) points.push_back({parse_rational(coord(x)), parse_rational(coord(y))});
  return PointSet::exact(std::move(points));
}

std::vector<std::pair<int, int>> edges(const EdgeGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edge_list()) out.emplace_back(e.i, e.j);
  return out;
}

EnumerationOptions options(bool crossings_allowed, int workers) {
  EnumerationOptions o;
  o.crossings_allowed = crossings_allowed;
  o.workers = workers;
  return o;
}

py::dict tour_dict(const Tour& t) {
  py::dict d;
  d["sequence"] = t.order;
  d["weight"] = t.weight.str(30, std::ios_base::fixed);
  d["spans"] = t.spans;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration and bound optimization for plane geometric graphs";
  m.attr("__version__") = kVersion;
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);

  py::class_<PointSet>(m, "PointSet")
      .def_static("exact", &make_exact, py::arg("points"),
                  "Points as (x, y) pairs of ints or rational strings \"p/q\".")
      .def_static("convex", &PointSet::abstract_convex, py::arg("n"))
      .def_static("from_json", [](const std::string& text) {
        return pointset_from_json(nlohmann::json::parse(text));
      })
      .def("to_json", [](const PointSet& ps) { return pointset_to_json(ps).dump(); })
      .def("__len__", &PointSet::size)
      .def_property_readonly("is_exact", &PointSet::is_exact)
      .def("coordinates", [](const PointSet& ps) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const Point& p : ps.points()) out.emplace_back(format_rational(p.x), format_rational(p.y));
        return out;
      });

  m.def("catalan", [](int n) { return to_py(catalan(n)); });
  m.def("binomial", [](int n, int k) { return to_py(binomial(n, k)); });
  m.def("middle_region_triangulation_count",
        [](int m_) { return to_py(middle_region_triangulation_count(m_)); });
  m.def("chain_reduction_counts", [](int k) {
    py::list out;
    for (const BigInt& v : chain_reduction_counts(k)) out.append(to_py(v));
    return out;
  });

  m.def("count",
        [](const PointSet& ps, const std::string& cls, bool crossings_allowed, int workers) {
          return to_py(count(ps, parse_graph_class(cls), options(crossings_allowed, workers)));
        },
        py::arg("points"), py::arg("graph_class"), py::arg("crossings_allowed") = false,
        py::arg("workers") = 1);
  m.def("enumerate",
        [](const PointSet& ps, const std::string& cls, bool crossings_allowed) {
          std::vector<std::vector<std::pair<int, int>>> out;
          enumerate(ps, parse_graph_class(cls), [&](const EdgeGraph& g) { out.push_back(edges(g)); },
                    options(crossings_allowed, 1));
          return out;
        },
        py::arg("points"), py::arg("graph_class"), py::arg("crossings_allowed") = false);
  m.def("extremal",
        [](const PointSet& ps, const std::string& cls, const std::string& objective,
           const std::string& crossings) {
          const auto rep = extremal_multiplicity(ps, parse_graph_class(cls), parse_objective(objective),
                                                 parse_crossing_policy(crossings));
          py::dict d;
          d["weight"] = rep.weight.str(30, std::ios_base::fixed);
          d["multiplicity"] = rep.multiplicity;
          d["unproven_ties"] = rep.unproven_ties;
          d["examined"] = rep.examined;
          std::vector<std::vector<std::pair<int, int>>> w;
          for (const auto& g : rep.witnesses) w.push_back(edges(g));
          d["witnesses"] = w;
          return d;
        },
        py::arg("points"), py::arg("graph_class"), py::arg("objective"),
        py::arg("crossings") = "forbidden");
  m.def("longest_convex_tours", [](const PointSet& ps) {
    py::list out;
    for (const Tour& t : longest_convex_tours(ps).tours) out.append(tour_dict(t));
    return out;
  });

  m.def("convex_polygon", &convex_polygon, py::arg("n"));
  m.def("double_chain",
        [](int r, int k) { return generalized_double_chain(ChainSpec{r, k, std::nullopt}); },
        py::arg("r"), py::arg("k") = 0);
  m.def("almost_convex_chain",
        [](int r, int k) { return almost_convex_chain(ChainSpec{r, k, std::nullopt}); },
        py::arg("r"), py::arg("k"));
  m.def("s4_matching_gadget", [](int n) { return s4_matching_gadget(n); }, py::arg("n"));
  m.def("deltoid_tour_gadget", [](int k) { return deltoid_tour_gadget(k).points; }, py::arg("k"));
  m.def("rotated_triangle_gadget", [](int n) { return rotated_triangle_gadget(n); },
        py::arg("n"));

  m.def("entropy", &entropy);
  m.def("gen_entropy", [](const std::vector<double>& a) { return gen_entropy(a); });
  m.def("tri_growth_rate", &tri_growth_rate);
  m.def("evaluate_bound", [](const std::string& objective, int order, const std::vector<double>& p) {
    return evaluate_bound(parse_bound_objective(objective), order, p);
  });
  m.def("published_parameters", [](const std::string& objective, int order) {
    return published_parameters(parse_bound_objective(objective), order);
  });
  m.def("optimize",
        [](const std::string& objective, int order, int restarts, std::uint64_t seed, double tol) {
          OptimizeOptions o;
          o.restarts = restarts;
          o.seed = seed;
          o.tol = tol;
          const BoundReport r = optimize(parse_bound_objective(objective), order, o);
          py::dict d;
          d["objective"] = r.objective;
          d["order"] = r.order;
          d["base"] = r.base;
          d["params"] = r.params;
          d["iterations"] = r.iterations;
          d["converged"] = r.converged;
          d["published_start"] = r.published_start;
          return d;
        },
        py::arg("objective"), py::arg("order"), py::arg("restarts") = 8, py::arg("seed") = 1,
        py::arg("tol") = 1e-10);
  m.def("minimize_sc_upper_rate", [] {
    const ScOptimum s = minimize_sc_upper_rate();
    py::dict d;
    d["a"] = s.a;
    d["factor"] = s.factor;
    d["bound"] = s.bound;
    return d;
  });

  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "multiplicity");
          std::ostringstream out, err;
          const int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one CLI command; returns (exit_code, stdout, stderr).");
}

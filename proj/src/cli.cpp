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

#include "multiplicity/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "multiplicity/acceptance.hpp"
#include "multiplicity/bound_lab.hpp"
#include "multiplicity/constructions.hpp"
#include "multiplicity/convex_tour.hpp"
#include "multiplicity/enumeration.hpp"
#include "multiplicity/errors.hpp"
#include "multiplicity/extremal.hpp"
#include "multiplicity/pointset_io.hpp"

namespace multiplicity {

namespace {

using nlohmann::json;

// Everything that determines a report. Serialized into every report.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string kind;  // gen
  std::optional<int> n, k, r;
  std::optional<std::string> parameter;  // flatness / delta / eps for gen
  std::string graph_class;
  std::string objective;
  std::string crossings = "forbidden";
  std::string weights = "auto";
  std::optional<int> order;
  std::string suite = "all";
  bool reproduce_tables = false;
  int workers = 1;
  std::uint64_t seed = 1;
  int restarts = 8;
  double tol = 1e-10;
  int max_iterations = 20000;
  std::string output;
  std::string format = "json";
};

json to_json(const RunConfig& c) {
  const EnumerationLimits limits = EnumerationLimits::from_environment();
  json j;
  j["command"] = c.command;
  j["inputs"] = c.inputs;
  j["workers"] = c.workers;
  j["output"] = c.output.empty() ? json(nullptr) : json(c.output);
  j["format"] = c.format;
  j["limits"] = {{"max_points", limits.max_points},
                 {"max_points_triangulation", limits.max_points_triangulation},
                 {"max_points_support", limits.max_points_support}};
  if (c.command == "gen") {
    j["kind"] = c.kind;
    for (auto [name, v] : {std::pair{"n", c.n}, {"k", c.k}, {"r", c.r}})
      j[name] = v ? json(*v) : json(nullptr);
    j["parameter"] = c.parameter ? json(*c.parameter) : json(nullptr);
  }
  if (c.command == "count" || c.command == "enumerate" || c.command == "extremal")
    j["class"] = c.graph_class;
  if (c.command == "extremal" || c.command == "tour" || c.command == "bound")
    j["objective"] = c.objective;
  if (c.command == "count" || c.command == "enumerate" || c.command == "extremal")
    j["crossings"] = c.crossings;
  if (c.command == "extremal" || c.command == "tour") j["weights"] = c.weights;
  if (c.command == "bound" || c.command == "verify") {
    j["seed"] = c.seed;
    j["restarts"] = c.restarts;
  }
  if (c.command == "bound") {
    j["order"] = c.order ? json(*c.order) : json(nullptr);
    j["tol"] = c.tol;
    j["max_iterations"] = c.max_iterations;
    j["reproduce_tables"] = c.reproduce_tables;
  }
  if (c.command == "verify") j["suite"] = c.suite;
  return j;
}

json envelope(const RunConfig& c, json result) {
  return json{{"config", to_json(c)}, {"version", kVersion}, {"result", std::move(result)}};
}

json edges_json(const EdgeGraph& g) {
  json list = json::array();
  for (const Edge& e : g.edge_list()) list.push_back({e.i, e.j});
  return list;
}

std::string decimal_string(const Decimal& d) { return d.str(30, std::ios_base::fixed); }

Rational parse_parameter(const std::string& text) { return parse_rational(text); }

PointSet generate(const RunConfig& c) {
  auto need = [&](const std::optional<int>& v, const char* name) {
    if (!v) throw InvalidInput("gen " + c.kind + " needs --" + name);
    return *v;
  };
  std::optional<Rational> param;
  if (c.parameter) param = parse_parameter(*c.parameter);
  if (c.kind == "convex") return convex_polygon(need(c.n, "n"));
  if (c.kind == "convex-abstract") return PointSet::abstract_convex(need(c.n, "n"));
  if (c.kind == "almost-convex-chain" || c.kind == "double-chain") {
    const int k = c.k.value_or(0);
    if (k < 0) throw InvalidInput("k must be non-negative");
    int r;
    if (c.r) {
      r = *c.r;
    } else {
      const int n = need(c.n, "n");
      const int chain = c.kind == "double-chain" ? n / 2 : n;
      if ((c.kind == "double-chain" && n % 2) || chain < 2 || (chain - 1) % (k + 1))
        throw InvalidInput("--n does not match r(k+1)+1 points per chain");
      r = (chain - 1) / (k + 1);
    }
    const ChainSpec spec{r, k, param};
    return c.kind == "double-chain" ? generalized_double_chain(spec) : almost_convex_chain(spec);
  }
  if (c.kind == "s4-matching") return s4_matching_gadget(need(c.n, "n"));
  if (c.kind == "deltoid") return deltoid_tour_gadget(need(c.k, "k"), param).points;
  if (c.kind == "hexagon") return hexagon_tour_gadget(need(c.k, "k"), param).points;
  if (c.kind == "rotated-triangles") return rotated_triangle_gadget(need(c.n, "n"), param);
  throw InvalidInput("unknown point-set kind \"" + c.kind + "\"");
}

WeightModel weights_for(const RunConfig& c, const PointSet& ps) {
  if (c.weights == "auto") return WeightModel::for_pointset(ps);
  if (c.weights == "euclidean") {
    if (!ps.is_exact()) throw InvalidInput("euclidean weights need coordinates");
    return WeightModel::euclidean(ps);
  }
  if (c.weights == "regular") return WeightModel::regular_polygon(ps.size());
  throw InvalidInput("unknown weight model \"" + c.weights + "\"");
}

EnumerationOptions enumeration_options(const RunConfig& c) {
  EnumerationOptions o;
  o.workers = c.workers;
  o.crossings_allowed = parse_crossing_policy(c.crossings) == CrossingPolicy::kAllowed;
  return o;
}

json tour_json(const Tour& t) {
  return json{{"sequence", t.order}, {"weight", decimal_string(t.weight)}, {"spans", t.spans}};
}

json bound_json(const BoundReport& r) {
  json j{{"objective", r.objective}, {"order", r.order},         {"base", r.base},
         {"params", r.params},       {"restarts", r.restarts},   {"iterations", r.iterations},
         {"tol", r.tol},             {"converged", r.converged}, {"seed", r.seed}};
  j["published_start"] = r.published_start ? json(*r.published_start) : json(nullptr);
  const auto printed = published_base(parse_bound_objective(r.objective), r.order);
  j["published_base"] = printed ? json(*printed) : json(nullptr);
  return j;
}

OptimizeOptions optimize_options(const RunConfig& c) {
  OptimizeOptions o;
  o.restarts = c.restarts;
  o.seed = c.seed;
  o.tol = c.tol;
  o.max_iterations = c.max_iterations;
  o.workers = c.workers;
  return o;
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

std::string reproduce_tables(const RunConfig& c) {
  std::ostringstream csv;
  csv << "# multiplicity " << kVersion << " seed=" << c.seed << " restarts=" << c.restarts
      << " tol=" << c.tol << "\n";
  csv << "objective,order,published_base,at_published_parameters,optimized_base,converged\n";
  const std::pair<BoundObjective, int> rows[] = {
      {BoundObjective::kTri, 4}, {BoundObjective::kSt, 8}, {BoundObjective::kCf, 9}};
  for (auto [objective, max_order] : rows) {
    for (int order = 1; order <= max_order; ++order) {
      const auto printed = published_base(objective, order);
      auto params = published_parameters(objective, order);
      const BoundReport best = optimize(objective, order, optimize_options(c));
      csv << to_string(objective) << "," << order << ","
          << (printed ? fixed(*printed, 4) : std::string()) << ","
          << (params ? fixed(evaluate_bound(objective, order, *params), 6) : std::string()) << ","
          << fixed(best.base, 6) << "," << (best.converged ? "true" : "false") << "\n";
    }
  }
  const ScOptimum sc = minimize_sc_upper_rate();
  csv << "sc,," << "68.62,," << fixed(sc.bound, 6) << ",true\n";
  const DcUpperBound dc = dc_upper_bound();
  csv << "dc,," << "24.68,," << fixed(dc.base, 6) << "," << (dc.inequality_holds ? "true" : "false")
      << "\n";
  return csv.str();
}

void check_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw InvalidInput("format \"" + c.format + "\" is not available for " + c.command);
}

// Returns the exit code; writes the report into `report`.
int dispatch(const RunConfig& c, std::string& report) {
  const auto dump = [](const json& j) { return j.dump(2) + "\n"; };
  if (c.command == "gen") {
    check_format(c, {"json"});
    json doc = pointset_to_json(generate(c));
    doc["provenance"] = {{"kind", c.kind}};
    for (auto [name, v] : {std::pair{"n", c.n}, {"k", c.k}, {"r", c.r}})
      if (v) doc["provenance"][name] = *v;
    if (c.parameter) doc["provenance"]["parameter"] = *c.parameter;
    doc["config"] = to_json(c);
    doc["version"] = kVersion;
    report = dump(doc);
    return kExitOk;
  }
  if (c.command == "count") {
    check_format(c, {"json"});
    const PointSet ps = load_pointset(c.inputs.at(0));
    const BigInt total = count(ps, parse_graph_class(c.graph_class), enumeration_options(c));
    report = dump(envelope(c, {{"n", ps.size()}, {"count", total.str()}}));
    return kExitOk;
  }
  if (c.command == "enumerate") {
    check_format(c, {"jsonl", "json"});
    const PointSet ps = load_pointset(c.inputs.at(0));
    std::ostringstream lines;
    json all = json::array();
    long long total = 0;
    enumerate(ps, parse_graph_class(c.graph_class),
              [&](const EdgeGraph& g) {
                ++total;
                if (c.format == "jsonl") lines << edges_json(g).dump() << "\n";
                else all.push_back(edges_json(g));
              },
              enumeration_options(c));
    if (c.format == "jsonl") {
      report = json{{"config", to_json(c)}, {"version", kVersion}, {"count", total}}.dump() +
               "\n" + lines.str();
    } else {
      report = dump(envelope(c, {{"count", total}, {"graphs", all}}));
    }
    return kExitOk;
  }
  if (c.command == "extremal") {
    check_format(c, {"json"});
    const PointSet ps = load_pointset(c.inputs.at(0));
    ExtremalOptions options;
    options.enumeration = enumeration_options(c);
    options.enumeration.crossings_allowed = false;
    const auto rep = extremal_multiplicity(ps, parse_graph_class(c.graph_class),
                                           parse_objective(c.objective),
                                           parse_crossing_policy(c.crossings),
                                           weights_for(c, ps), options);
    json witnesses = json::array();
    for (const auto& g : rep.witnesses) witnesses.push_back(edges_json(g));
    report = dump(envelope(c, {{"class", to_string(rep.graph_class)},
                               {"objective", to_string(rep.objective)},
                               {"crossings", to_string(rep.crossings)},
                               {"weight", decimal_string(rep.weight)},
                               {"multiplicity", rep.multiplicity},
                               {"unproven_ties", rep.unproven_ties},
                               {"examined", rep.examined},
                               {"witnesses", witnesses}}));
    return kExitOk;
  }
  if (c.command == "tour") {
    check_format(c, {"json"});
    const PointSet ps = load_pointset(c.inputs.at(0));
    const WeightModel w = weights_for(c, ps);
    json result;
    const Objective objective = parse_objective(c.objective);
    if (objective == Objective::kMax) {
      const auto tours = longest_convex_tours(ps, w);
      json list = json::array(), candidates = json::array();
      for (const auto& t : tours.tours) list.push_back(tour_json(t));
      for (const auto& t : tours.candidates) candidates.push_back(tour_json(t));
      result = {{"objective", "longest"},
                {"tours", list},
                {"multiplicity", tours.tours.size()},
                {"thrackle", is_thrackle(tours.tours.front(), ps)}};
      if (ps.size() % 2 == 0) result["candidates"] = candidates;
    } else {
      const Tour t = shortest_convex_tour(ps, w);
      result = {{"objective", "shortest"}, {"tours", json::array({tour_json(t)})},
                {"multiplicity", 1}};
    }
    report = dump(envelope(c, result));
    return kExitOk;
  }
  if (c.command == "bound") {
    if (c.reproduce_tables) {
      check_format(c, {"csv"});
      report = reproduce_tables(c);
      return kExitOk;
    }
    check_format(c, {"json"});
    if (c.objective.empty()) throw InvalidInput("bound needs an objective (tri, st, cf)");
    if (!c.order) throw InvalidInput("bound needs --order");
    const BoundReport r = optimize(parse_bound_objective(c.objective), *c.order, optimize_options(c));
    report = dump(envelope(c, bound_json(r)));
    return kExitOk;
  }
  if (c.command == "verify") {
    check_format(c, {"json"});
    AcceptanceOptions options;
    options.workers = c.workers;
    options.seed = c.seed;
    options.restarts = c.restarts;
    json matrix = json::array();
    bool all = true;
    for (const auto& res : run_suite(parse_suite(c.suite), options)) {
      json checks = json::array();
      for (const auto& ch : res.checks)
        checks.push_back({{"label", ch.label},
                          {"observed", ch.observed},
                          {"expected", ch.expected},
                          {"pass", ch.pass}});
      matrix.push_back(
          {{"criterion", res.id}, {"title", res.title}, {"pass", res.pass()}, {"checks", checks}});
      all = all && res.pass();
    }
    report = dump(envelope(c, {{"suite", c.suite}, {"pass", all}, {"criteria", matrix}}));
    return all ? kExitOk : kExitVerifyFailed;
  }
  throw InvalidInput("no command given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Counting and extremal multiplicity tools for plane geometric graphs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--out", c.output, "Write the report to this file");
    sub->add_option("--format", c.format, "json, jsonl or csv");
  };
  const auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "Generate a point set");
  gen->add_option("kind", c.kind,
                  "convex, convex-abstract, almost-convex-chain, double-chain, s4-matching, "
                  "deltoid, hexagon, rotated-triangles")
      ->required();
  gen->add_option("--n", c.n, "Number of points");
  gen->add_option("--k", c.k, "Reflex chain length, or gadget size");
  gen->add_option("--r", c.r, "Number of reflex chains");
  gen->add_option("--param", c.parameter, "Flatness, delta or eps as a rational p/q");
  add_output(gen);

  std::string input;
  auto* cnt = app.add_subcommand("count", "Count the graphs of a class");
  auto* en = app.add_subcommand("enumerate", "List the graphs of a class");
  auto* ex = app.add_subcommand("extremal", "Count the graphs of extremal weight");
  for (auto* sub : {cnt, en, ex}) {
    sub->add_option("pointset", input, "Point-set JSON")->required();
    sub->add_option("--class", c.graph_class,
                    "triangulation, spanning-tree, spanning-cycle, perfect-matching, forest, "
                    "all-plane")
        ->required();
    sub->add_option("--crossings", c.crossings, "forbidden or allowed");
    add_workers(sub);
    add_output(sub);
  }
  ex->add_option("--objective", c.objective, "min or max")->required();
  ex->add_option("--weights", c.weights, "auto, euclidean or regular");

  auto* tour = app.add_subcommand("tour", "Longest or shortest tour of a convex point set");
  tour->add_option("pointset", input, "Point-set JSON")->required();
  tour->add_option("--objective", c.objective, "longest or shortest")->required();
  tour->add_option("--weights", c.weights, "auto, euclidean or regular");
  add_output(tour);

  auto* bound = app.add_subcommand("bound", "Optimize an exponential-bound objective");
  bound->add_option("objective", c.objective, "tri, st or cf");
  bound->add_option("--order", c.order, "k for tri, z for st/cf");
  bound->add_option("--restarts", c.restarts, "Random restarts")->check(CLI::NonNegativeNumber);
  bound->add_option("--seed", c.seed, "Random seed");
  bound->add_option("--tol", c.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
  bound->add_option("--max-iterations", c.max_iterations, "Iteration budget per start")
      ->check(CLI::PositiveNumber);
  bound->add_flag("--reproduce-tables", c.reproduce_tables, "Emit the table of bases as CSV");
  add_workers(bound);
  add_output(bound);

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--suite", c.suite, "all, enumeration, paper-constants or weighted");
  std::uint64_t verify_seed = 2026;
  int verify_restarts = 2;
  verify->add_option("--seed", verify_seed, "Random seed");
  verify->add_option("--restarts", verify_restarts, "Optimizer restarts")
      ->check(CLI::NonNegativeNumber);
  add_workers(verify);
  add_output(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (!input.empty()) c.inputs.push_back(input);
  if (c.command == "verify") {
    c.seed = verify_seed;
    c.restarts = verify_restarts;
  }
  if (c.reproduce_tables && c.format == "json") c.format = "csv";

  try {
    std::string report;
    const int code = dispatch(c, report);
    if (c.output.empty()) {
      out << report;
    } else {
      std::ofstream file(c.output, std::ios::binary);
      if (!file) throw InvalidInput("cannot write " + c.output);
      file << report;
    }
    return code;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kExitLimitExceeded;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace multiplicity

#include "hyperlag/cli.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hyperlag/compression.hpp"
#include "hyperlag/io.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/optimizer.hpp"
#include "hyperlag/theorems.hpp"

namespace hyperlag::cli {

namespace {

using io::json;

struct OptimizerFlags {
  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<int> max_iters;
  std::optional<int> threads;
  std::string config;

  void attach(CLI::App* sub) {
    sub->add_option("--restarts", restarts, "Number of ascent starts (default 100)");
    sub->add_option("--seed", seed, "Seed for the random starts (default 0)");
    sub->add_option("--tol", tol, "Projected-gradient stopping tolerance (default 1e-9)");
    sub->add_option("--max-iters", max_iters, "Iteration cap per start (default 10000)");
    sub->add_option("--threads", threads,
                    "Worker threads for restarts (default: available parallelism)");
    sub->add_option("--config", config, "JSON file with an optimizer settings block")
        ->check(CLI::ExistingFile);
  }

  OptimizerSettings resolve() const {
    OptimizerSettings s;
    if (!config.empty()) {
      std::ifstream in(config);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw io::ParseError(std::string("malformed config: ") + e.what(), 0);
      }
      s = io::settings_from_json(j.contains("optimizer") ? j.at("optimizer") : j, s);
    }
    if (restarts) s.restarts = *restarts;
    if (seed) s.seed = *seed;
    if (tol) s.tol = *tol;
    if (max_iters) s.max_iters = *max_iters;
    if (threads) s.threads = *threads;
    return s;
  }
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

std::string join(std::span<const double> v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + io::format12(v[k]);
  return s;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lagrangians of non-uniform hypergraphs", "hyperlag"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);
  std::function<int()> action;

  // compute
  auto* compute = app.add_subcommand("compute", "Maximize (or evaluate) the Lagrangian of a graph");
  std::string compute_graph, compute_weights;
  bool compute_json = false;
  OptimizerFlags compute_opt;
  compute->add_option("graph", compute_graph, "Graph file (text or JSON)")->required();
  compute->add_option("--weights", compute_weights,
                      "Evaluate at this weighting instead of maximizing");
  compute->add_flag("--json", compute_json, "Emit a JSON report");
  compute_opt.attach(compute);
  compute->callback([&] {
    action = [&]() -> int {
      const auto h = io::read_graph_file(compute_graph);
      if (!compute_weights.empty()) {
        const auto x = io::read_weighting_file(compute_weights);
        const double value = eval(h, x);
        const auto g = gradient(h, x);
        const auto opt = check_optimality(h, x);
        if (compute_json) {
          json grad = json::array();
          for (double v : g.g) grad.push_back(io::round12(v));
          json pairs = json::array();
          for (auto [a, b] : opt.cover_violations) pairs.push_back({a, b});
          emit(out, {{"value", io::round12(value)},
                     {"gradient", grad},
                     {"kkt_residual", io::round12(opt.kkt_residual)},
                     {"cover_violations", pairs}});
        } else {
          out << "value " << io::format12(value) << "\n"
              << "gradient " << join(g.g) << "\n"
              << "kkt_residual " << io::format12(opt.kkt_residual) << "\n";
        }
        return kOk;
      }
      const auto settings = compute_opt.resolve();
      const auto res = maximize(h, settings);
      if (compute_json) {
        auto j = io::to_json(res);
        j["settings"] = io::settings_to_json(settings);
        emit(out, j);
      } else {
        out << "value " << io::format12(res.value) << "\n";
        if (res.uniform_value) out << "uniform_value " << io::format12(*res.uniform_value) << "\n";
        out << "x " << join(res.x.values()) << "\n"
            << "support " << join(res.support.labels()) << "\n"
            << "kkt_residual " << io::format12(res.kkt_residual) << "\n"
            << "cover_violations " << res.cover_violations.size() << "\n";
      }
      return kOk;
    };
  });

  // clique
  auto* clique = app.add_subcommand("clique", "Order of the maximum complete R-subgraph");
  std::string clique_graph;
  std::vector<int> clique_types;
  bool clique_json = false;
  clique->add_option("graph", clique_graph, "Graph file (text or JSON)")->required();
  clique->add_option("--types", clique_types, "Edge cardinalities, e.g. 1,3 (default: all)")
      ->delimiter(',');
  clique->add_flag("--json", clique_json, "Emit a JSON report");
  clique->callback([&] {
    action = [&]() -> int {
      const auto h = io::read_graph_file(clique_graph);
      std::set<int> types(clique_types.begin(), clique_types.end());
      if (types.empty()) types = h.edge_types();
      const auto res = max_complete_subgraph_order(h, types);
      if (clique_json) {
        emit(out, {{"order", res.order},
                   {"witness", res.witness.labels()},
                   {"types", std::vector<int>(types.begin(), types.end())}});
      } else {
        out << "order " << res.order << ", witness " << join(res.witness.labels()) << "\n";
      }
      return kOk;
    };
  });

  // compress
  auto* compress = app.add_subcommand("compress", "Left-compress a graph to its fixpoint");
  std::string compress_graph;
  bool compress_json = false;
  compress->add_option("graph", compress_graph, "Graph file (text or JSON)")->required();
  compress->add_flag("--json", compress_json, "Emit a JSON report");
  compress->callback([&] {
    action = [&]() -> int {
      const auto h = io::read_graph_file(compress_graph);
      const auto res = left_compress(h);
      if (compress_json) {
        emit(out, io::to_json(res, h));
      } else {
        out << "steps";
        for (auto [i, j] : res.trace.steps) out << " (" << i << "," << j << ")";
        out << "\nsweeps " << res.trace.sweeps << "\n" << io::format_graph_text(res.graph);
      }
      return kOk;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a graph against one theorem");
  std::string theorem_name, verify_graph;
  bool verify_json = false, force = false;
  std::optional<int> verify_r;
  OptimizerFlags verify_opt;
  std::vector<std::string> theorem_names;
  for (const auto& e : catalog()) theorem_names.emplace_back(to_string(e.theorem_id));
  verify_cmd->add_option("theorem", theorem_name, "Theorem id (see `catalog`)")
      ->required()
      ->check(CLI::IsMember(theorem_names));
  verify_cmd->add_option("graph", verify_graph, "Graph file (text or JSON)")->required();
  verify_cmd->add_option("--r", verify_r, "Expected r for onr (the graph must be a {1,r}-graph)");
  verify_cmd->add_flag("--force", force, "Run the optimizer even if a hypothesis fails");
  verify_cmd->add_flag("--json", verify_json, "Emit a JSON report");
  verify_opt.attach(verify_cmd);
  verify_cmd->callback([&] {
    action = [&]() -> int {
      const auto h = io::read_graph_file(verify_graph);
      const auto id = *parse_theorem_id(theorem_name);
      if (verify_r) {
        if (id != TheoremId::onr) throw TheoremError("--r applies to onr only");
        if (!matches_edge_types(id, h.edge_types()) || *h.edge_types().rbegin() != *verify_r) {
          throw TheoremError("graph is not a {1," + std::to_string(*verify_r) + "}-graph");
        }
      }
      VerifyOptions opts;
      opts.optimizer = verify_opt.resolve();
      opts.force = force;
      const auto rep = verify(id, h, opts);
      if (verify_json) {
        emit(out, io::to_json(rep));
      } else {
        out << "theorem " << to_string(rep.theorem_id) << "\n";
        for (const auto& hyp : rep.hypotheses) {
          out << "  [" << (hyp.holds ? "ok" : "FAILED") << "] " << hyp.name << ": "
              << hyp.detail << "\n";
        }
        out << "expected " << io::format12(rep.expected) << "\n";
        if (rep.computed) out << "computed " << io::format12(*rep.computed) << "\n";
        out << "verdict " << to_string(rep.verdict) << "\n";
      }
      return rep.verdict == Verdict::verified ? kOk : kFailed;
    };
  });

  // counterexample
  auto* counter = app.add_subcommand("counterexample",
                                     "Build a known construction and certify its inequality");
  std::string construction;
  std::optional<int> ce_s, ce_t, ce_n;
  bool counter_json = false;
  counter->add_option("construction", construction, "ce_t3, ce_t4, ce_edgebound or ce_peng2")
      ->required()
      ->check(CLI::IsMember({"ce_t3", "ce_t4", "ce_edgebound", "ce_peng2"}));
  counter->add_option("--s", ce_s, "Order of the complete 3-graph");
  counter->add_option("--t", ce_t, "Order of the complete {1,3}-subgraph");
  counter->add_option("--n", ce_n, "Vertex count (default: smallest allowed)");
  counter->add_flag("--json", counter_json, "Emit a JSON report");
  counter->callback([&] {
    action = [&]() -> int {
      const auto rep = build_counterexample(*parse_construction_id(construction),
                                            CounterexampleParams{ce_s, ce_t, ce_n});
      if (counter_json) {
        emit(out, io::to_json(rep));
      } else {
        out << "construction " << to_string(rep.construction_id) << "\n"
            << "lhs " << to_string(rep.lhs) << " (" << io::format12(to_double(rep.lhs)) << ")\n"
            << "rhs " << to_string(rep.rhs) << " (" << io::format12(to_double(rep.rhs)) << ")\n"
            << "strict " << (rep.strict ? "true" : "false") << "\n";
      }
      return rep.strict ? kOk : kFailed;
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive grid search over the simplex");
  std::string oracle_graph;
  int grid_m = 50;
  bool oracle_json = false;
  oracle->add_option("graph", oracle_graph, "Graph file (text or JSON)")->required();
  oracle->add_option("--grid-m", grid_m, "Grid resolution m (default 50)")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--json", oracle_json, "Emit a JSON report");
  oracle->callback([&] {
    action = [&]() -> int {
      const auto h = io::read_graph_file(oracle_graph);
      const auto res = grid_oracle(h, grid_m);
      if (oracle_json) {
        emit(out, io::to_json(res));
      } else {
        out << "value " << io::format12(res.value) << "\n"
            << "x " << join(res.x.values()) << "\n"
            << "gap_bound " << io::format12(res.gap_bound) << "\n";
      }
      return kOk;
    };
  });

  // catalog
  auto* cat = app.add_subcommand("catalog", "List the implemented theorems");
  bool catalog_json = false;
  cat->add_flag("--json", catalog_json, "Emit a JSON report");
  cat->callback([&] {
    action = [&]() -> int {
      if (catalog_json) {
        json arr = json::array();
        for (const auto& e : catalog()) arr.push_back(io::to_json(e));
        emit(out, arr);
      } else {
        for (const auto& e : catalog()) {
          out << to_string(e.theorem_id) << "  " << e.edge_types << "  " << e.formula;
          if (!e.threshold.empty()) out << "  [" << e.threshold << "]";
          out << "\n";
        }
      }
      return kOk;
    };
  });

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("hyperlag");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const HypergraphError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const WeightingError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const TheoremError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const OptimizerError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace hyperlag::cli

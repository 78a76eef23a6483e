#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hyperlag/compression.hpp"
#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/optimizer.hpp"
#include "hyperlag/theorems.hpp"

namespace hyperlag::io {

using nlohmann::json;

/// Malformed input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Graph text format:
//   # comment
//   n <count>
//   <v1> <v2> ...   one edge per line, strictly increasing labels
// JSON mirror: {"n": int, "edges": [[int, ...], ...]}. parse_graph picks the
// format from the first non-blank character.
Hypergraph parse_graph(std::string_view text);
Hypergraph read_graph_file(const std::filesystem::path& path);
std::string format_graph_text(const Hypergraph& h);
json graph_to_json(const Hypergraph& h);
Hypergraph graph_from_json(const json& j);

// Weighting format: one real per line (# comments allowed), or a JSON array.
std::vector<double> parse_weights(std::string_view text);
Weighting read_weighting_file(const std::filesystem::path& path);

/// Optimizer settings block: {"restarts", "seed", "max_iters", "tol",
/// "threads"}, all optional. Unknown keys are rejected.
OptimizerSettings settings_from_json(const json& j, OptimizerSettings base = {});
json settings_to_json(const OptimizerSettings& s);

/// Rounds to 12 significant digits so that emitted JSON numbers carry no more.
double round12(double v);
std::string format12(double v);

json to_json(const OptimizationResult& r);
json to_json(const OracleResult& r);
json to_json(const TheoremReport& r);
json to_json(const CounterexampleReport& r);
json to_json(const CompressionResult& r, const Hypergraph& before);
json to_json(const CatalogEntry& e);

}  // namespace hyperlag::io

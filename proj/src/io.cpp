#include "hyperlag/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace hyperlag::io {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

char first_significant(std::string_view text) {
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c;
  }
  return '\0';
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  if (used != tok.size() || v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  return static_cast<int>(v);
}

json vertex_list(const std::vector<int>& labels) { return json(labels); }

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

json rounded(std::span<const double> xs) {
  json out = json::array();
  for (double v : xs) out.push_back(round12(v));
  return out;
}

json number_or_null(double v) {
  return std::isfinite(v) ? json(round12(v)) : json(nullptr);
}

}  // namespace

Hypergraph parse_graph(std::string_view text) {
  if (first_significant(text) == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON graph: ") + e.what(), 0);
    }
    return graph_from_json(j);
  }
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = 0;
  std::vector<EdgeMask> edges;
  std::unordered_map<EdgeMask, int> first_line;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (n == 0) {
      if (toks.size() != 2 || toks[0] != "n") {
        throw ParseError("expected header 'n <count>'", lineno);
      }
      n = parse_int(toks[1], lineno);
      if (n < 1 || n > kMaxVertices) {
        throw ParseError("vertex count must lie in 1.." + std::to_string(kMaxVertices),
                         lineno);
      }
      continue;
    }
    std::vector<int> labels;
    for (const auto& tok : toks) {
      const int v = parse_int(tok, lineno);
      if (v < 1 || v > n) {
        throw ParseError("vertex " + tok + " outside 1.." + std::to_string(n), lineno);
      }
      if (!labels.empty() && v <= labels.back()) {
        throw ParseError("edge labels must be strictly increasing", lineno);
      }
      labels.push_back(v);
    }
    const EdgeMask e = mask_from_labels(labels, n);
    if (auto [it, fresh] = first_line.emplace(e, lineno); !fresh) {
      throw ParseError("duplicate edge (first seen on line " + std::to_string(it->second) + ")",
                       lineno);
    }
    edges.push_back(e);
  }
  if (n == 0) throw ParseError("missing header 'n <count>'", lineno);
  return Hypergraph::from_masks(n, edges);
}

Hypergraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_file(path));
}

std::string format_graph_text(const Hypergraph& h) {
  std::string out = "n " + std::to_string(h.n()) + "\n";
  for (const auto& e : h.edge_lists()) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      out += (k ? " " : "") + std::to_string(e[k]);
    }
    out += "\n";
  }
  return out;
}

json graph_to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edge_lists()) edges.push_back(vertex_list(e));
  return {{"n", h.n()}, {"edges", edges}};
}

Hypergraph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw ParseError("JSON graph needs keys \"n\" and \"edges\"", 0);
    }
    const int n = j.at("n").get<int>();
    auto edges = j.at("edges").get<std::vector<std::vector<int>>>();
    return Hypergraph::build(n, edges);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON graph: ") + e.what(), 0);
  } catch (const HypergraphError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::vector<double> parse_weights(std::string_view text) {
  if (first_significant(text) == '[') {
    try {
      return json::parse(text).get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed JSON weighting: ") + e.what(), 0);
    }
  }
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::vector<double> out;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 1) throw ParseError("expected one number per line", lineno);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(toks[0], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != toks[0].size()) {
      throw ParseError("expected a number, got '" + toks[0] + "'", lineno);
    }
    out.push_back(v);
  }
  return out;
}

Weighting read_weighting_file(const std::filesystem::path& path) {
  try {
    return Weighting::from_user(parse_weights(read_file(path)));
  } catch (const WeightingError& e) {
    throw ParseError(e.what(), 0);
  }
}

OptimizerSettings settings_from_json(const json& j, OptimizerSettings base) {
  if (!j.is_object()) throw ParseError("optimizer settings must be a JSON object", 0);
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "restarts") {
        base.restarts = value.get<int>();
      } else if (key == "seed") {
        base.seed = value.get<std::uint64_t>();
      } else if (key == "max_iters") {
        base.max_iters = value.get<int>();
      } else if (key == "tol") {
        base.tol = value.get<double>();
      } else if (key == "threads") {
        base.threads = value.get<int>();
      } else {
        throw ParseError("unknown optimizer setting '" + key + "'", 0);
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed optimizer settings: ") + e.what(), 0);
  }
  return base;
}

json settings_to_json(const OptimizerSettings& s) {
  return {{"restarts", s.restarts},
          {"seed", s.seed},
          {"max_iters", s.max_iters},
          {"tol", s.tol}};
}

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json to_json(const OptimizationResult& r) {
  json j = {
      {"value", round12(r.value)},
      {"x", rounded(r.x.values())},
      {"support", vertex_list(r.support.labels())},
      {"kkt_residual", round12(r.kkt_residual)},
      {"cover_violations", pairs_json(r.cover_violations)},
      {"restarts_used", r.restarts_used},
  };
  j["uniform_value"] = r.uniform_value ? json(round12(*r.uniform_value)) : json(nullptr);
  return j;
}

json to_json(const OracleResult& r) {
  return {{"value", round12(r.value)},
          {"x", rounded(r.x.values())},
          {"counts", r.counts},
          {"grid_resolution", r.grid_resolution},
          {"gap_bound", round12(r.gap_bound)}};
}

json to_json(const TheoremReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) {
    hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
  }
  json j = {
      {"theorem_id", std::string(to_string(r.theorem_id))},
      {"hypotheses", hyps},
      {"expected", number_or_null(r.expected)},
      {"computed", r.computed ? number_or_null(*r.computed) : json(nullptr)},
      {"verdict", std::string(to_string(r.verdict))},
      {"tolerance", r.tolerance},
      {"t", r.t},
  };
  if (r.s) j["s"] = *r.s;
  if (r.r) j["r"] = *r.r;
  if (r.optimum) j["witness"] = rounded(r.optimum->x.values());
  return j;
}

json to_json(const CounterexampleReport& r) {
  json x = json::array();
  for (const auto& q : r.x) x.push_back(to_string(q));
  json j = {
      {"construction_id", std::string(to_string(r.construction_id))},
      {"graph", graph_to_json(r.graph)},
      {"x", x},
      {"form", r.form},
      {"lhs", to_string(r.lhs)},
      {"rhs", to_string(r.rhs)},
      {"lhs_value", round12(to_double(r.lhs))},
      {"rhs_value", round12(to_double(r.rhs))},
      {"margin", to_string(Rational(r.lhs - r.rhs))},
      {"strict", r.strict},
      {"s", r.s},
      {"t", r.t},
  };
  if (r.literal_rhs) {
    j["literal_rhs"] = to_string(*r.literal_rhs);
    j["literal_strict"] = *r.literal_strict;
  }
  return j;
}

json to_json(const CompressionResult& r, const Hypergraph& before) {
  json steps = json::array();
  for (const auto& [i, j] : r.trace.steps) steps.push_back({i, j});
  auto counts = [](const std::map<int, std::size_t>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
  };
  return {{"before", graph_to_json(before)},
          {"after", graph_to_json(r.graph)},
          {"steps", steps},
          {"sweeps", r.trace.sweeps},
          {"initial_edge_counts", counts(r.trace.initial_edge_counts)},
          {"final_edge_counts", counts(r.trace.final_edge_counts)},
          {"left_compressed", is_left_compressed(r.graph)}};
}

json to_json(const CatalogEntry& e) {
  return {{"theorem_id", std::string(to_string(e.theorem_id))},
          {"edge_types", e.edge_types},
          {"summary", e.summary},
          {"hypotheses", e.hypotheses},
          {"formula", e.formula},
          {"threshold", e.threshold}};
}

}  // namespace hyperlag::io

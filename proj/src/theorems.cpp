#include "hyperlag/theorems.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "hyperlag/lagrangian.hpp"

namespace hyperlag {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 6> kTheoremNames{{
    {TheoremId::motzkin_straus, "motzkin_straus"},
    {TheoremId::peng_3graph, "peng_3graph"},
    {TheoremId::peng_12, "peng_12"},
    {TheoremId::onr, "onr"},
    {TheoremId::on13, "on13"},
    {TheoremId::on123, "on123"},
}};

constexpr std::array<std::pair<ConstructionId, std::string_view>, 4>
    kConstructionNames{{
        {ConstructionId::ce_t3, "ce_t3"},
        {ConstructionId::ce_t4, "ce_t4"},
        {ConstructionId::ce_edgebound, "ce_edgebound"},
        {ConstructionId::ce_peng2, "ce_peng2"},
    }};

std::size_t binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::size_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::size_t>(n - k + i) / i;
  return c;
}

std::string format_types(const std::set<int>& types) {
  std::string s = "{";
  bool first = true;
  for (int r : types) {
    s += (first ? "" : ",") + std::to_string(r);
    first = false;
  }
  return s + "}";
}

int order_of(const Hypergraph& h, const std::set<int>& types) {
  return max_complete_subgraph_order(h, types).order;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [k, name] : kTheoremNames) {
    if (k == id) return name;
  }
  return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (const auto& [k, n] : kTheoremNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::hypothesis_failed:
      return "hypothesis_failed";
    case Verdict::mismatch:
      return "mismatch";
  }
  return "unknown";
}

std::string_view to_string(ConstructionId id) {
  for (const auto& [k, name] : kConstructionNames) {
    if (k == id) return name;
  }
  return "unknown";
}

std::optional<ConstructionId> parse_construction_id(std::string_view name) {
  for (const auto& [k, n] : kConstructionNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool TheoremReport::hypotheses_hold() const {
  for (const auto& h : hypotheses) {
    if (!h.holds) return false;
  }
  return true;
}

bool matches_edge_types(TheoremId id, const std::set<int>& types) {
  switch (id) {
    case TheoremId::motzkin_straus:
      return types == std::set<int>{2};
    case TheoremId::peng_3graph:
      return types == std::set<int>{3};
    case TheoremId::peng_12:
      return types == std::set<int>{1, 2};
    case TheoremId::onr:
      return types.size() == 2 && types.contains(1) && *types.rbegin() >= 3;
    case TheoremId::on13:
      return types == std::set<int>{1, 3};
    case TheoremId::on123:
      return types == std::set<int>{1, 2, 3};
  }
  return false;
}

double theorem_formula(TheoremId id, int t, int r) {
  const double tt = t;
  switch (id) {
    case TheoremId::motzkin_straus:
      return 0.5 * (1.0 - 1.0 / tt);
    case TheoremId::peng_3graph:
      return static_cast<double>(binom(t, 3)) / (tt * tt * tt);
    case TheoremId::peng_12:
      return 2.0 - 1.0 / tt;
    case TheoremId::onr: {
      double p = 1.0;
      for (int i = 1; i <= r - 1; ++i) p *= (tt - i);
      return 1.0 + p / std::pow(tt, r - 1);
    }
    case TheoremId::on13:
      return 1.0 + (tt - 1) * (tt - 2) / (tt * tt);
    case TheoremId::on123:
      return 1.0 + (tt - 1) / tt + (tt - 1) * (tt - 2) / (tt * tt);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool in_edge_band(std::size_t edges, int s, int t) {
  const std::size_t lo = binom(s, 3);
  return lo <= edges && edges <= lo + binom(t - 1, 2);
}

TheoremReport check_hypotheses(TheoremId id, const Hypergraph& h) {
  const auto types = h.edge_types();
  if (!matches_edge_types(id, types)) {
    throw TheoremError(std::string(to_string(id)) +
                       " does not apply to a " + format_types(types) +
                       "-graph");
  }
  TheoremReport rep;
  rep.theorem_id = id;
  auto add = [&](std::string name, bool holds, std::string detail) {
    rep.hypotheses.push_back({std::move(name), holds, std::move(detail)});
  };
  switch (id) {
    case TheoremId::motzkin_straus: {
      rep.t = order_of(h, {2});
      add("clique_order", rep.t >= 2,
          "largest clique has order t=" + std::to_string(rep.t));
      break;
    }
    case TheoremId::peng_3graph: {
      rep.t = order_of(h, {3});
      const auto m = h.edge_count(3);
      add("clique_order", rep.t >= 3,
          "largest 3-uniform clique has order t=" + std::to_string(rep.t));
      add("edge_band", in_edge_band(m, rep.t, rep.t),
          "m=" + std::to_string(m) + " within [" + std::to_string(binom(rep.t, 3)) +
              ", " + std::to_string(binom(rep.t, 3) + binom(rep.t - 1, 2)) + "]");
      break;
    }
    case TheoremId::peng_12: {
      rep.t = order_of(h, {1, 2});
      add("complete_12_order", rep.t >= 2,
          "maximum complete {1,2}-subgraph has order t=" + std::to_string(rep.t) +
              " (needs t >= 2)");
      break;
    }
    case TheoremId::onr: {
      const int r = *types.rbegin();
      rep.r = r;
      rep.t = order_of(h, types);
      const int t1 = order_of(h, {1});
      add("orders_agree", rep.t == t1,
          "complete {1," + std::to_string(r) + "}-order " + std::to_string(rep.t) +
              ", complete {1}-order " + std::to_string(t1));
      const BigInt bound = threshold(r);
      add("threshold", BigInt(rep.t) >= bound,
          "t=" + std::to_string(rep.t) + " >= " + bound.str());
      break;
    }
    case TheoremId::on13: {
      rep.t = order_of(h, {1, 3});
      const int s = order_of(h, {3});
      rep.s = s;
      const auto m = h.edge_count(3);
      add("min_order", rep.t >= 5, "t=" + std::to_string(rep.t) + " >= 5");
      add("clique_3_order", s >= rep.t,
          "largest 3-uniform clique s=" + std::to_string(s) + " >= t");
      add("edge_band", in_edge_band(m, s, rep.t),
          "e(H^3)=" + std::to_string(m) + " within [" + std::to_string(binom(s, 3)) +
              ", " + std::to_string(binom(s, 3) + binom(rep.t - 1, 2)) + "]");
      break;
    }
    case TheoremId::on123: {
      rep.t = order_of(h, {1, 2, 3});
      const int t1 = order_of(h, {1});
      add("orders_agree", rep.t == t1,
          "complete {1,2,3}-order " + std::to_string(rep.t) +
              ", complete {1}-order " + std::to_string(t1));
      add("min_order", rep.t >= 8, "t=" + std::to_string(rep.t) + " >= 8");
      break;
    }
  }
  rep.expected = theorem_formula(id, rep.t, rep.r.value_or(3));
  rep.verdict = rep.hypotheses_hold() ? Verdict::verified : Verdict::hypothesis_failed;
  return rep;
}

TheoremReport verify(TheoremId id, const Hypergraph& h, const VerifyOptions& opts) {
  TheoremReport rep = check_hypotheses(id, h);
  rep.tolerance = opts.tolerance;
  const bool holds = rep.hypotheses_hold();
  if (!holds && !opts.force) {
    rep.verdict = Verdict::hypothesis_failed;
    return rep;
  }
  auto opt = maximize(h, opts.optimizer);
  const bool uniform_form =
      id == TheoremId::motzkin_straus || id == TheoremId::peng_3graph;
  rep.computed = uniform_form ? *opt.uniform_value : opt.value;
  rep.optimum = std::move(opt);
  if (!holds) {
    rep.verdict = Verdict::hypothesis_failed;
  } else if (std::abs(*rep.computed - rep.expected) <= rep.tolerance) {
    rep.verdict = Verdict::verified;
  } else {
    rep.verdict = Verdict::mismatch;
  }
  return rep;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw TheoremError(what);
}

// [s]^(3) as masks.
void add_complete_triples(std::vector<EdgeMask>& edges, int s) {
  for_each_subset((EdgeMask{1} << s) - 1, 3, [&](EdgeMask e) { edges.push_back(e); });
}

EdgeMask triple(int a, int b, int c) {
  return vertex_bit(a) | vertex_bit(b) | vertex_bit(c);
}

}  // namespace

CounterexampleReport build_counterexample(ConstructionId id,
                                          const CounterexampleParams& params) {
  CounterexampleReport rep;
  rep.construction_id = id;
  std::vector<EdgeMask> edges;
  int n = 0;
  switch (id) {
    case ConstructionId::ce_t3:
    case ConstructionId::ce_t4: {
      const int core = id == ConstructionId::ce_t3 ? 3 : 4;
      require(params.s.has_value(), "construction needs --s");
      const int s = *params.s;
      require(s >= core + 1, "s must be at least " + std::to_string(core + 1));
      n = params.n.value_or(s);
      require(n >= s && n <= kMaxVertices, "n must satisfy s <= n <= 64");
      rep.s = s;
      rep.t = core;
      for (int v = 1; v <= core; ++v) edges.push_back(vertex_bit(v));
      add_complete_triples(edges, s);
      // Decimal weights, taken exactly.
      const Rational heavy = parse_decimal(core == 3 ? "0.333" : "0.2498");
      const Rational rest = parse_decimal(core == 3 ? "0.001" : "0.0008");
      rep.x.assign(n, Rational(0));
      for (int v = 1; v <= core; ++v) rep.x[v - 1] = heavy;
      for (int v = core + 1; v <= s; ++v) rep.x[v - 1] = rest / (s - core);
      rep.rhs = closed_form_exact(core, {1, 3});
      rep.form = "lambda_prime";
      break;
    }
    case ConstructionId::ce_edgebound: {
      require(params.t.has_value() && params.s.has_value(),
              "construction needs --t and --s");
      const int t = *params.t;
      const int s = *params.s;
      require(t >= 5, "t must be at least 5");
      require(s >= t + 1, "s must be at least t+1");
      n = params.n.value_or(s + 1);
      require(n >= s + 1 && n <= kMaxVertices, "n must satisfy s+1 <= n <= 64");
      rep.s = s;
      rep.t = t;
      for (int v = 1; v <= t; ++v) edges.push_back(vertex_bit(v));
      edges.push_back(vertex_bit(s + 1));
      add_complete_triples(edges, s);
      edges.push_back(triple(1, t, s + 1));
      for (int a = 1; a <= t - 1; ++a) {
        for (int b = a + 1; b <= t - 1; ++b) edges.push_back(triple(a, b, s + 1));
      }
      rep.x.assign(n, Rational(0));
      for (int v = 1; v <= t - 1; ++v) rep.x[v - 1] = Rational(1, t);
      rep.x[t - 1] = Rational(1, 2 * t);
      rep.x[s] = Rational(1, 2 * t);
      rep.rhs = closed_form_exact(t, {1, 3});
      rep.literal_rhs = closed_form_exact(t, {3});
      rep.form = "lambda_prime";
      break;
    }
    case ConstructionId::ce_peng2: {
      require(params.t.has_value(), "construction needs --t");
      const int t = *params.t;
      require(t >= 3, "t must be at least 3");
      n = params.n.value_or(t + 1);
      require(n >= t + 1 && n <= kMaxVertices, "n must satisfy t+1 <= n <= 64");
      rep.t = t;
      rep.s = t;
      add_complete_triples(edges, t);
      for (int a = 1; a <= t - 1; ++a) {
        for (int b = a + 1; b <= t - 1; ++b) edges.push_back(triple(a, b, t + 1));
      }
      edges.push_back(triple(1, t, t + 1));
      rep.x.assign(n, Rational(0));
      for (int v = 1; v <= t - 1; ++v) rep.x[v - 1] = Rational(1, t);
      rep.x[t - 1] = Rational(1, 2 * t);
      rep.x[t] = Rational(1, 2 * t);
      rep.rhs = Rational(static_cast<long long>(binom(t, 3)),
                         static_cast<long long>(t) * t * t);
      rep.form = "lambda";
      break;
    }
  }
  rep.graph = Hypergraph::from_masks(n, edges);
  rep.lhs = rep.form == "lambda" ? eval_uniform_exact(rep.graph, rep.x)
                                 : eval_exact(rep.graph, rep.x);
  rep.strict = rep.lhs > rep.rhs;
  if (rep.literal_rhs) rep.literal_strict = rep.lhs > *rep.literal_rhs;
  return rep;
}

std::vector<CatalogEntry> catalog() {
  return {
      {TheoremId::motzkin_straus, "{2}",
       "A 2-graph whose largest clique has order t has Lagrangian (1/2)(1-1/t).",
       {"clique_order"},
       "(1/2)(1-1/t)",
       ""},
      {TheoremId::peng_3graph, "{3}",
       "A 3-graph with m edges containing a clique of order t, with "
       "C(t,3) <= m <= C(t,3)+C(t-1,2), has the Lagrangian of [t]^(3).",
       {"clique_order", "edge_band"},
       "C(t,3)/t^3",
       ""},
      {TheoremId::peng_12, "{1,2}",
       "A {1,2}-graph whose maximum complete {1,2}-subgraph has order t >= 2 "
       "has Lagrangian 2-1/t.",
       {"complete_12_order"},
       "2-1/t",
       ""},
      {TheoremId::onr, "{1,r}",
       "A {1,r}-graph whose maximum complete {1,r}- and {1}-subgraphs both have "
       "order t above the threshold has the Lagrangian of K_t^{1,r}.",
       {"orders_agree", "threshold"},
       "1+prod_{i=1}^{r-1}(t-i)/t^{r-1}",
       "t >= ceil((r(r-1)-1)^(r-2) / (r(r-1))^(r-3))"},
      {TheoremId::on13, "{1,3}",
       "A {1,3}-graph with maximum complete {1,3}-subgraph of order t >= 5, "
       "largest 3-uniform clique of order s >= t and "
       "C(s,3) <= e(H^3) <= C(s,3)+C(t-1,2) has the Lagrangian of K_t^{1,3}.",
       {"min_order", "clique_3_order", "edge_band"},
       "1+(t-1)(t-2)/t^2",
       "t >= 5"},
      {TheoremId::on123, "{1,2,3}",
       "A {1,2,3}-graph whose maximum complete {1,2,3}- and {1}-subgraphs both "
       "have order t >= 8 has the Lagrangian of K_t^{1,2,3}.",
       {"orders_agree", "min_order"},
       "1+(t-1)/t+(t-1)(t-2)/t^2",
       "t >= 8"},
  };
}

}  // namespace hyperlag

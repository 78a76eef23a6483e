#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/optimizer.hpp"
#include "hyperlag/rational.hpp"

namespace hyperlag {

class TheoremError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TheoremId { motzkin_straus, peng_3graph, peng_12, onr, on13, on123 };

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

enum class Verdict { verified, hypothesis_failed, mismatch };
std::string_view to_string(Verdict v);

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string detail;
};

inline constexpr double kTheoremTolerance = 1e-5;

struct VerifyOptions {
  OptimizerSettings optimizer;
  double tolerance = kTheoremTolerance;
  /// Run the optimizer even when a hypothesis fails.
  bool force = false;
};

/// Outcome of checking one hypergraph against one theorem. `expected` and
/// `computed` use the theorem's own normalization: λ for the uniform
/// theorems (motzkin_straus, peng_3graph), λ′ otherwise.
struct TheoremReport {
  TheoremId theorem_id{};
  std::vector<Hypothesis> hypotheses;
  double expected = 0.0;
  std::optional<double> computed;
  Verdict verdict = Verdict::hypothesis_failed;
  double tolerance = kTheoremTolerance;
  int t = 0;
  std::optional<int> s;
  std::optional<int> r;
  std::optional<OptimizationResult> optimum;

  bool hypotheses_hold() const;
};

/// Edge-type set each theorem applies to; for onr, R = {1, r} with r ≥ 3.
bool matches_edge_types(TheoremId id, const std::set<int>& types);

/// Evaluates the hypotheses, and when they hold (or under `force`) maximizes
/// λ′ and compares with the theorem's formula. Throws TheoremError when the
/// edge types do not match the theorem.
TheoremReport verify(TheoremId id, const Hypergraph& h,
                     const VerifyOptions& opts = {});

/// Hypotheses only; no optimization.
TheoremReport check_hypotheses(TheoremId id, const Hypergraph& h);

/// The theorem's closed form at order t (r used by onr only).
double theorem_formula(TheoremId id, int t, int r = 3);

/// e(H^3) band shared by peng_3graph (with s = t) and on13.
bool in_edge_band(std::size_t edges, int s, int t);

enum class ConstructionId { ce_t3, ce_t4, ce_edgebound, ce_peng2 };

std::string_view to_string(ConstructionId id);
std::optional<ConstructionId> parse_construction_id(std::string_view name);

struct CounterexampleParams {
  std::optional<int> s;
  std::optional<int> t;
  std::optional<int> n;
};

/// A fixed weighting of a construction, evaluated exactly against the closed form it beats.
/// For ce_peng2 both sides are in λ form; otherwise λ′.
struct CounterexampleReport {
  ConstructionId construction_id{};
  Hypergraph graph;
  std::vector<Rational> x;
  Rational lhs;
  Rational rhs;
  bool strict = false;
  std::string form;  // "lambda" or "lambda_prime"
  int s = 0;
  int t = 0;
  /// ce_edgebound also records the literal comparison against λ′([t]^(3)).
  std::optional<Rational> literal_rhs;
  std::optional<bool> literal_strict;
};

CounterexampleReport build_counterexample(ConstructionId id,
                                          const CounterexampleParams& params);

struct CatalogEntry {
  TheoremId theorem_id{};
  std::string edge_types;
  std::string summary;
  std::vector<std::string> hypotheses;
  std::string formula;
  std::string threshold;  // empty when the theorem has none
};

std::vector<CatalogEntry> catalog();

}  // namespace hyperlag

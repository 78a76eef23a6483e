#pragma once

#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/rational.hpp"

namespace hyperlag {

class WeightingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Feasibility tolerance for internally produced weightings.
inline constexpr double kTrustedSimplexTol = 1e-12;
/// User-supplied weightings within this distance of the simplex are
/// renormalized; anything further away is rejected.
inline constexpr double kUserSimplexTol = 1e-6;

/// A point of the standard simplex (a legal weighting), indexed by vertex
/// label minus one.
class Weighting {
 public:
  Weighting() = default;

  /// For weightings computed internally; the sum must be 1 within 1e-12.
  static Weighting trusted(std::vector<double> x);
  /// For weightings read from files: renormalizes small drift, rejects
  /// negative entries and sums off by more than 1e-6.
  static Weighting from_user(std::vector<double> x);
  static Weighting uniform(int n, EdgeMask on);
  static Weighting uniform(int n) {
    return uniform(n, n == 64 ? ~EdgeMask{0} : (EdgeMask{1} << n) - 1);
  }
  static Weighting vertex(int n, int v);

  std::size_t size() const { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }
  /// Weight of vertex v (1-based).
  double at(int v) const { return x_.at(v - 1); }
  std::span<const double> values() const { return x_; }

  VertexSet support(double eps = 0.0) const;

 private:
  explicit Weighting(std::vector<double> x) : x_(std::move(x)) {}
  std::vector<double> x_;
};

/// Partial derivatives of λ′ at a weighting, g[i] for vertex i+1.
struct Gradient {
  std::vector<double> g;
  double operator[](std::size_t i) const { return g[i]; }
  std::size_t size() const { return g.size(); }
};

/// r! for 0 ≤ r ≤ 20.
double factorial(int r);
BigInt factorial_exact(int r);

/// Σ over the edges of level r of the product of vertex weights.
double eval_level(const Hypergraph& h, int r, std::span<const double> x);

/// λ(G, x) for a single-level hypergraph.
double eval_uniform(const Hypergraph& g, std::span<const double> x);
inline double eval_uniform(const Hypergraph& g, const Weighting& x) {
  return eval_uniform(g, x.values());
}

/// λ′(H, x) = Σ_r r!·λ(H^r, x).
double eval(const Hypergraph& h, std::span<const double> x);
inline double eval(const Hypergraph& h, const Weighting& x) {
  return eval(h, x.values());
}

/// Exact evaluation of λ′ with rational weights (no simplex check).
Rational eval_exact(const Hypergraph& h, std::span<const Rational> x);
/// Exact λ for a single-level hypergraph.
Rational eval_uniform_exact(const Hypergraph& g, std::span<const Rational> x);

Gradient gradient(const Hypergraph& h, std::span<const double> x);
inline Gradient gradient(const Hypergraph& h, const Weighting& x) {
  return gradient(h, x.values());
}

/// λ′(H, y) − λ′(H, x), accumulated per edge as a telescoping sum so that it
/// keeps full relative precision when x and y are close.
double eval_difference(const Hypergraph& h, std::span<const double> x,
                       std::span<const double> y);

/// λ′ and its gradient in one pass over the edges.
double eval_with_gradient(const Hypergraph& h, std::span<const double> x,
                          std::vector<double>& grad);

/// λ′(K_t^R) = Σ_{r∈R} r!·C(t,r)/t^r, attained by the uniform weighting.
double closed_form(int t, const std::set<int>& types);
Rational closed_form_exact(int t, const std::set<int>& types);

/// ⌈(r(r−1)−1)^{r−2} / (r(r−1))^{r−3}⌉, the order bound for {1,r}-graphs.
BigInt threshold(int r);

}  // namespace hyperlag

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"

namespace hyperlag {

/// Weights at or below this count as zero when classifying the support.
inline constexpr double kSupportEps = 1e-8;
/// Largest value drop accepted when the support-minimization pass zeroes a
/// coordinate.
inline constexpr double kValueEps = 1e-10;

struct OptimizerSettings {
  int restarts = 100;
  std::uint64_t seed = 0;
  int max_iters = 10000;
  double tol = 1e-9;
  /// 0 means std::thread::hardware_concurrency().
  int threads = 0;
  bool minimize_support = true;
};

class OptimizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptimizationResult {
  double value = 0.0;  // λ′ form
  /// λ form (value / r!) when the hypergraph has a single edge type.
  std::optional<double> uniform_value;
  Weighting x;
  VertexSet support;
  double kkt_residual = 0.0;
  std::vector<std::pair<int, int>> cover_violations;
  int restarts_used = 0;
  long iterations = 0;
};

/// Multi-start projected gradient ascent of λ′ over the simplex, followed by a
/// heuristic support-minimization pass. Deterministic for fixed settings.
OptimizationResult maximize(const Hypergraph& h,
                            const OptimizerSettings& cfg = {});

struct AscentResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Single ascent run from `start`, restricted to the vertices in `allowed`
/// (other coordinates stay at zero). `start` must be feasible on `allowed`.
AscentResult ascend(const Hypergraph& h, std::vector<double> start,
                    EdgeMask allowed, int max_iters, double tol);

/// Euclidean projection of y onto {x ≥ 0, Σx = 1} over the coordinates in
/// `allowed` (sorting-based); the others are set to zero.
void project_to_simplex(std::vector<double>& y, EdgeMask allowed);

struct OptimalityReport {
  double kkt_residual = 0.0;
  std::vector<std::pair<int, int>> cover_violations;
};

/// Equal-partials residual on the support and support pairs that no edge
/// covers.
OptimalityReport check_optimality(const Hypergraph& h, const Weighting& x,
                                  double support_eps = kSupportEps);

struct OracleResult {
  double value = 0.0;
  Weighting x;
  int grid_resolution = 0;
  std::vector<int> counts;  // x_i = counts[i] / m
  /// C(H)/m with C(H) = Σ_r r!·|E^r|·r.
  double gap_bound = 0.0;
};

inline constexpr std::uint64_t kDefaultOracleCap = 50'000'000;

/// Exhaustive maximum of λ′ over the grid points k/m of the simplex.
OracleResult grid_oracle(const Hypergraph& h, int m,
                         std::uint64_t max_points = kDefaultOracleCap);

/// Number of grid points C(m+n−1, n−1), saturating at UINT64_MAX.
std::uint64_t grid_size(int n, int m);

double lipschitz_constant(const Hypergraph& h);

}  // namespace hyperlag

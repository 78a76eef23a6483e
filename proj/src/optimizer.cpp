#include "hyperlag/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace hyperlag {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-16;
constexpr double kMaxStep = 1e6;
constexpr double kTieTol = 1e-12;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

EdgeMask all_vertices(int n) {
  return n == kMaxVertices ? ~EdgeMask{0} : (EdgeMask{1} << n) - 1;
}

void normalize(std::vector<double>& x) {
  const double s = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= s;
}

// Starts in a fixed order: uniform, each vertex, then seeded random points
// (normalized exponentials, i.e. flat Dirichlet samples).
std::vector<double> start_point(int n, int index, std::uint64_t seed) {
  std::vector<double> x(n, 0.0);
  if (index == 0) {
    std::fill(x.begin(), x.end(), 1.0 / n);
  } else if (index <= n) {
    x[index - 1] = 1.0;
  } else {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
    std::exponential_distribution<double> expo(1.0);
    for (double& v : x) v = expo(rng);
    normalize(x);
  }
  return x;
}

bool lex_smaller(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

void project_to_simplex(std::vector<double>& y, EdgeMask allowed) {
  std::vector<double> u;
  u.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (allowed & (EdgeMask{1} << i)) u.push_back(y[i]);
  }
  if (u.empty()) throw OptimizerError("projection onto an empty face");
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0.0) theta = candidate;
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = (allowed & (EdgeMask{1} << i)) ? std::max(y[i] - theta, 0.0) : 0.0;
  }
}

AscentResult ascend(const Hypergraph& h, std::vector<double> start,
                    EdgeMask allowed, int max_iters, double tol) {
  const std::size_t n = start.size();
  AscentResult out;
  out.x = std::move(start);
  std::vector<double> grad, trial(n), probe(n), trial_grad;
  double value = eval_with_gradient(h, out.x, grad);
  double step = 1.0;
  for (int it = 0; it < max_iters; ++it) {
    // Stationarity: distance moved by a unit projected-gradient step.
    for (std::size_t i = 0; i < n; ++i) probe[i] = out.x[i] + grad[i];
    project_to_simplex(probe, allowed);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(probe[i] - out.x[i]));
    }
    if (residual <= tol) {
      out.converged = true;
      break;
    }
    // Backtracking along the projection arc, starting from twice the last
    // accepted step.
    // Progress is measured along the simplex: the change of total mass from
    // rounding in the projection is priced at the mean partial and removed,
    // otherwise it swamps the true gain near a maximizer.
    double mean_grad = 0.0;
    int face = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (allowed & (EdgeMask{1} << i)) {
        mean_grad += grad[i];
        ++face;
      }
    }
    mean_grad /= face;
    double alpha = std::min(2.0 * step, kMaxStep);
    bool accepted = false;
    double trial_value = 0.0;
    while (alpha >= kMinStep) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = out.x[i] + alpha * grad[i];
      project_to_simplex(trial, allowed);
      double gain = 0.0;
      double mass = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        gain += (grad[i] - mean_grad) * (trial[i] - out.x[i]);
        mass += trial[i] - out.x[i];
      }
      const double delta = eval_difference(h, out.x, trial) - mean_grad * mass;
      if (delta >= kArmijo * gain && delta > 0.0) {
        trial_value = eval_with_gradient(h, trial, trial_grad);
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    ++out.iterations;
    if (!accepted) break;  // no representable ascent step remains
    step = alpha;
    out.x.swap(trial);
    grad.swap(trial_grad);
    value = trial_value;
  }
  out.value = value;
  return out;
}

OptimalityReport check_optimality(const Hypergraph& h, const Weighting& x,
                                  double support_eps) {
  OptimalityReport rep;
  const auto g = gradient(h, x.values());
  const auto supp = x.support(support_eps).labels();
  if (supp.empty()) return rep;
  double mean = 0.0;
  for (int v : supp) mean += g[v - 1];
  mean /= static_cast<double>(supp.size());
  for (int v : supp) {
    rep.kkt_residual = std::max(rep.kkt_residual, std::abs(g[v - 1] - mean));
  }
  std::vector<EdgeMask> covered(h.n() + 1, 0);
  for (const auto& [r, edges] : h.levels()) {
    if (r < 2) continue;
    for (EdgeMask e : edges) {
      for (int v : labels_from_mask(e)) covered[v] |= e;
    }
  }
  for (std::size_t a = 0; a < supp.size(); ++a) {
    for (std::size_t b = a + 1; b < supp.size(); ++b) {
      if (!(covered[supp[a]] & vertex_bit(supp[b]))) {
        rep.cover_violations.emplace_back(supp[a], supp[b]);
      }
    }
  }
  return rep;
}

namespace {

// Zero small coordinates one at a time and re-ascend on the reduced face,
// keeping the change whenever the value stays within kValueEps of the best.
long minimize_support(const Hypergraph& h, std::vector<double>& x,
                      const OptimizerSettings& cfg) {
  const double target = eval(h, x);
  long iterations = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> order;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
      if (x[i] > 0.0) order.push_back(i);
    }
    if (order.size() <= 1) break;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x[a] < x[b]; });
    EdgeMask face = 0;
    for (int i : order) face |= EdgeMask{1} << i;
    for (int i : order) {
      const EdgeMask reduced = face & ~(EdgeMask{1} << i);
      std::vector<double> start = x;
      start[i] = 0.0;
      normalize(start);
      auto run = ascend(h, std::move(start), reduced, cfg.max_iters, cfg.tol);
      iterations += run.iterations;
      if (run.value >= target - kValueEps) {
        x = std::move(run.x);
        changed = true;
        break;
      }
    }
  }
  return iterations;
}

}  // namespace

OptimizationResult maximize(const Hypergraph& h, const OptimizerSettings& cfg) {
  if (h.empty()) throw OptimizerError("hypergraph has no edges");
  if (cfg.restarts < 1) throw OptimizerError("restarts must be at least 1");
  if (cfg.max_iters < 1) throw OptimizerError("max_iters must be at least 1");
  const int n = h.n();
  const EdgeMask everything = all_vertices(n);

  std::vector<AscentResult> runs(cfg.restarts);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < cfg.restarts; k = next++) {
      runs[k] = ascend(h, start_point(n, k, cfg.seed), everything,
                       cfg.max_iters, cfg.tol);
    }
  };
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, cfg.restarts);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Merge: largest value; values within kTieTol of it count as ties, broken
  // by the lexicographically smallest witness.
  long iterations = 0;
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& run : runs) {
    iterations += run.iterations;
    top = std::max(top, run.value);
  }
  const double floor = top - kTieTol * std::max(1.0, std::abs(top));
  std::size_t best = runs.size();
  for (std::size_t k = 0; k < runs.size(); ++k) {
    if (runs[k].value < floor) continue;
    if (best == runs.size() || lex_smaller(runs[k].x, runs[best].x)) best = k;
  }
  std::vector<double> x = std::move(runs[best].x);
  if (x.empty()) {
    throw OptimizerError("no feasible iterate produced");  // unreachable
  }
  if (cfg.minimize_support) iterations += minimize_support(h, x, cfg);
  normalize(x);

  OptimizationResult res;
  res.x = Weighting::trusted(std::move(x));
  res.value = eval(h, res.x);
  if (h.levels().size() == 1) {
    res.uniform_value = res.value / factorial(h.levels().begin()->first);
  }
  res.support = res.x.support(kSupportEps);
  auto opt = check_optimality(h, res.x);
  res.kkt_residual = opt.kkt_residual;
  res.cover_violations = std::move(opt.cover_violations);
  res.restarts_used = cfg.restarts;
  res.iterations = iterations;
  return res;
}

std::uint64_t grid_size(int n, int m) {
  // C(m+n-1, n-1), built incrementally so every partial value is an integer.
  unsigned __int128 c = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  for (int k = 1; k <= n - 1; ++k) {
    c = c * static_cast<unsigned>(m + k) / static_cast<unsigned>(k);
    if (c > cap) return cap;
  }
  return static_cast<std::uint64_t>(c);
}

double lipschitz_constant(const Hypergraph& h) {
  double c = 0.0;
  for (const auto& [r, edges] : h.levels()) {
    c += factorial(r) * static_cast<double>(edges.size()) * r;
  }
  return c;
}

namespace {

struct GridSearch {
  const Hypergraph& h;
  int m;
  std::vector<int> counts;
  std::vector<double> x;
  double best_value = -1.0;
  std::vector<int> best_counts;

  void visit(int pos, int remaining) {
    const int n = static_cast<int>(counts.size());
    if (pos == n - 1) {
      counts[pos] = remaining;
      x[pos] = static_cast<double>(remaining) / m;
      const double v = eval(h, x);
      if (v > best_value) {
        best_value = v;
        best_counts = counts;
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      counts[pos] = k;
      x[pos] = static_cast<double>(k) / m;
      visit(pos + 1, remaining - k);
    }
  }
};

}  // namespace

OracleResult grid_oracle(const Hypergraph& h, int m, std::uint64_t max_points) {
  if (m < 1) throw OptimizerError("grid resolution must be at least 1");
  const int n = h.n();
  const auto points = grid_size(n, m);
  if (points > max_points) {
    throw OptimizerError("grid has " + std::to_string(points) +
                         " points, over the cap of " + std::to_string(max_points));
  }
  GridSearch search{h, m, std::vector<int>(n, 0), std::vector<double>(n, 0.0), -1.0, {}};
  search.visit(0, m);

  OracleResult out;
  out.value = search.best_value;
  out.counts = search.best_counts;
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = static_cast<double>(out.counts[i]) / m;
  out.x = Weighting::from_user(std::move(x));
  out.grid_resolution = m;
  out.gap_bound = lipschitz_constant(h) / m;
  return out;
}

}  // namespace hyperlag

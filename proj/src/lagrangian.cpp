#include "hyperlag/lagrangian.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace hyperlag {

Rational parse_decimal(const std::string& text) {
  std::string digits;
  BigInt scale = 1;
  bool seen_point = false;
  bool negative = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (k == 0 && (c == '-' || c == '+')) {
      negative = c == '-';
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) scale *= 10;
    } else {
      throw std::invalid_argument("not a decimal literal: " + text);
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a decimal literal: " + text);
  // A leading zero would make the string constructor read octal.
  const auto first = digits.find_first_not_of('0');
  const BigInt value = first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
  Rational q(value, scale);
  return negative ? Rational(-q) : q;
}

namespace {

void check_length(const Hypergraph& h, std::size_t len) {
  if (len != static_cast<std::size_t>(h.n())) {
    throw WeightingError("weighting has length " + std::to_string(len) +
                         " but the hypergraph has " + std::to_string(h.n()) +
                         " vertices");
  }
}

const std::array<double, kMaxArity + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kMaxArity + 1> t{};
    t[0] = 1.0;
    for (int r = 1; r <= kMaxArity; ++r) t[r] = t[r - 1] * r;
    return t;
  }();
  return table;
}

}  // namespace

Weighting Weighting::trusted(std::vector<double> x) {
  double sum = 0.0;
  for (double v : x) {
    if (!(v >= 0.0)) throw WeightingError("weighting has a negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kTrustedSimplexTol) {
    throw WeightingError("weighting does not sum to 1");
  }
  return Weighting(std::move(x));
}

Weighting Weighting::from_user(std::vector<double> x) {
  if (x.empty()) throw WeightingError("weighting is empty");
  double sum = 0.0;
  for (double v : x) {
    if (!std::isfinite(v) || v < 0.0) {
      throw WeightingError("weighting entries must be finite and non-negative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kUserSimplexTol) {
    throw WeightingError("weighting sums to " + std::to_string(sum) +
                         ", not 1");
  }
  for (double& v : x) v /= sum;
  return Weighting(std::move(x));
}

Weighting Weighting::uniform(int n, EdgeMask on) {
  std::vector<double> x(n, 0.0);
  const int k = popcount(on);
  if (k == 0) throw WeightingError("uniform weighting needs a nonempty support");
  for (int v : labels_from_mask(on)) x.at(v - 1) = 1.0 / k;
  return Weighting(std::move(x));
}

Weighting Weighting::vertex(int n, int v) {
  std::vector<double> x(n, 0.0);
  x.at(v - 1) = 1.0;
  return Weighting(std::move(x));
}

VertexSet Weighting::support(double eps) const {
  EdgeMask m = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] > eps) m |= EdgeMask{1} << i;
  }
  return VertexSet(m);
}

double factorial(int r) {
  if (r < 0 || r > kMaxArity) {
    throw std::out_of_range("factorial argument " + std::to_string(r) +
                            " outside 0.." + std::to_string(kMaxArity));
  }
  return factorial_table()[r];
}

BigInt factorial_exact(int r) {
  BigInt f = 1;
  for (int k = 2; k <= r; ++k) f *= k;
  return f;
}

double eval_level(const Hypergraph& h, int r, std::span<const double> x) {
  check_length(h, x.size());
  double sum = 0.0;
  for (EdgeMask e : h.edges(r)) {
    double p = 1.0;
    for (EdgeMask m = e; m != 0; m &= m - 1) p *= x[std::countr_zero(m)];
    sum += p;
  }
  return sum;
}

double eval_uniform(const Hypergraph& g, std::span<const double> x) {
  if (g.levels().size() != 1) {
    throw HypergraphError("uniform Lagrangian needs exactly one edge type");
  }
  return eval_level(g, g.levels().begin()->first, x);
}

double eval(const Hypergraph& h, std::span<const double> x) {
  check_length(h, x.size());
  double sum = 0.0;
  for (const auto& [r, _] : h.levels()) sum += factorial(r) * eval_level(h, r, x);
  return sum;
}

namespace {

Rational level_exact(const Hypergraph& h, int r, std::span<const Rational> x) {
  Rational sum = 0;
  for (EdgeMask e : h.edges(r)) {
    Rational p = 1;
    for (EdgeMask m = e; m != 0; m &= m - 1) p *= x[std::countr_zero(m)];
    sum += p;
  }
  return sum;
}

}  // namespace

Rational eval_exact(const Hypergraph& h, std::span<const Rational> x) {
  check_length(h, x.size());
  Rational sum = 0;
  for (const auto& [r, _] : h.levels()) {
    sum += Rational(factorial_exact(r)) * level_exact(h, r, x);
  }
  return sum;
}

Rational eval_uniform_exact(const Hypergraph& g, std::span<const Rational> x) {
  check_length(g, x.size());
  if (g.levels().size() != 1) {
    throw HypergraphError("uniform Lagrangian needs exactly one edge type");
  }
  return level_exact(g, g.levels().begin()->first, x);
}

double eval_with_gradient(const Hypergraph& h, std::span<const double> x,
                          std::vector<double>& grad) {
  check_length(h, x.size());
  grad.assign(x.size(), 0.0);
  std::array<int, kMaxArity> idx{};
  std::array<double, kMaxArity + 1> prefix{};
  double value = 0.0;
  for (const auto& [r, edges] : h.levels()) {
    const double scale = factorial(r);
    double level_sum = 0.0;
    for (EdgeMask e : edges) {
      int k = 0;
      for (EdgeMask m = e; m != 0; m &= m - 1) idx[k++] = std::countr_zero(m);
      prefix[0] = 1.0;
      for (int a = 0; a < r; ++a) prefix[a + 1] = prefix[a] * x[idx[a]];
      level_sum += prefix[r];
      // Products of the other members, without dividing by x (zeros allowed).
      double suffix = 1.0;
      for (int a = r - 1; a >= 0; --a) {
        grad[idx[a]] += scale * prefix[a] * suffix;
        suffix *= x[idx[a]];
      }
    }
    value += scale * level_sum;
  }
  return value;
}

double eval_difference(const Hypergraph& h, std::span<const double> x,
                       std::span<const double> y) {
  check_length(h, x.size());
  check_length(h, y.size());
  std::array<int, kMaxArity> idx{};
  double total = 0.0;
  for (const auto& [r, edges] : h.levels()) {
    double level_sum = 0.0;
    for (EdgeMask e : edges) {
      int k = 0;
      for (EdgeMask m = e; m != 0; m &= m - 1) idx[k++] = std::countr_zero(m);
      // Π y − Π x = Σ_k (Π_{a<k} y_a)(y_k − x_k)(Π_{a>k} x_a)
      double suffix = 1.0;
      double diff = 0.0;
      std::array<double, kMaxArity + 1> prefix_y{};
      prefix_y[0] = 1.0;
      for (int a = 0; a < r; ++a) prefix_y[a + 1] = prefix_y[a] * y[idx[a]];
      for (int a = r - 1; a >= 0; --a) {
        diff += prefix_y[a] * (y[idx[a]] - x[idx[a]]) * suffix;
        suffix *= x[idx[a]];
      }
      level_sum += diff;
    }
    total += factorial(r) * level_sum;
  }
  return total;
}

Gradient gradient(const Hypergraph& h, std::span<const double> x) {
  Gradient out;
  eval_with_gradient(h, x, out.g);
  return out;
}

namespace {

void check_types(int t, const std::set<int>& types) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  for (int r : types) {
    if (r < 1 || r > t || r > kMaxArity) {
      throw std::invalid_argument("cardinality " + std::to_string(r) +
                                  " not in 1..t (t=" + std::to_string(t) + ")");
    }
  }
}

}  // namespace

double closed_form(int t, const std::set<int>& types) {
  check_types(t, types);
  double sum = 0.0;
  for (int r : types) {
    // r!·C(t,r)/t^r = Π_{i<r} (t−i)/t
    double p = 1.0;
    for (int i = 0; i < r; ++i) p *= static_cast<double>(t - i) / t;
    sum += p;
  }
  return sum;
}

Rational closed_form_exact(int t, const std::set<int>& types) {
  check_types(t, types);
  Rational sum = 0;
  for (int r : types) {
    Rational p = 1;
    for (int i = 0; i < r; ++i) p *= Rational(t - i, t);
    sum += p;
  }
  return sum;
}

BigInt threshold(int r) {
  if (r < 3) {
    throw std::invalid_argument("threshold is defined for r >= 3, got " +
                                std::to_string(r));
  }
  const BigInt q = BigInt(r) * (r - 1);
  const BigInt num = boost::multiprecision::pow(q - 1, r - 2);
  const BigInt den = boost::multiprecision::pow(q, r - 3);
  return (num + den - 1) / den;
}

}  // namespace hyperlag

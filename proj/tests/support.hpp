#pragma once

// Shared test helpers: a brute-force oracle that only uses is_dominating, and
// seeded random graphs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "domroots/domroots.hpp"

namespace testsupport {

using namespace domroots;

// Straight subset loop, no pruning, no shared code with the counting kernels.
inline std::vector<BigInt> naive_counts(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<BigInt> counts(n + 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s;
    std::size_t size = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (bits >> v & 1) {
        s.insert(v);
        ++size;
      }
    if (is_dominating(g, s)) counts[size] += 1;
  }
  return counts;
}

inline DominationPolynomial naive_polynomial(const Graph& g) { return DominationPolynomial(naive_counts(g)); }

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution edge(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges, kMaxVertices);
}

inline Graph random_sized_graph(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> order(lo, hi);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  const auto n = order(rng);
  return random_graph(rng, n, density(rng));
}

// Every labeled graph on n vertices; bit k of `mask` is the k-th pair (u < v).
inline Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++k)
      if (mask >> k & 1) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// (1 + x)^n - 1 from binomials computed here.
inline std::vector<BigInt> complete_closed_form(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  BigInt b = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    b = b * (n - i + 1) / i;
    c[i] = b;
  }
  return c;
}

// max_i |r_i - c_i| / max(|c_i|, 1) between the monic polynomial rebuilt
// from the roots and the exact coefficients (leading coefficient 1).
inline double reconstruction_error(const DominationPolynomial& p, const ComplexRootSet& rs) {
  const auto rebuilt = reconstruct_monic(rs);
  const auto& c = p.coeffs();
  if (rebuilt.size() != c.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const long double exact = c[i].convert_to<long double>();
    const long double scale = std::max<long double>(std::abs(exact), 1.0L);
    worst = std::max(worst, static_cast<double>(std::abs(rebuilt[i] - exact) / scale));
  }
  return worst;
}

}  // namespace testsupport

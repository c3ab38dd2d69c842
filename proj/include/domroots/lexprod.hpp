#pragma once

// Lexicographic product G[H] and its domination polynomial.
//
// A set S of G[H] dominates iff its projection A onto G dominates G and, for
// every a in A with no neighbor inside A, the layer S restricted to {a} x V(H)
// dominates H. Grouping by A gives, with m = |V(H)|,
//
//   D(G[H], x) = sum over dominating A of
//                ((1 + x)^m - 1)^(|A| - iso(A)) * D(H, x)^iso(A)
//
// where iso(A) counts vertices of A isolated in G[A]. When H is complete,
// D(H, x) = (1 + x)^m - 1 and this collapses to D(G, (1 + x)^m - 1).

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "domroots/bigint.hpp"
#include "domroots/counting.hpp"
#include "domroots/error.hpp"
#include "domroots/graph.hpp"
#include "domroots/graph6.hpp"
#include "domroots/polynomial.hpp"
#include "domroots/roots.hpp"

namespace domroots {

/// Vertex (g_index, h_index) of G[H], flattened row-major in the G coordinate.
struct ProductIndex {
  std::size_t g_index = 0;
  std::size_t h_index = 0;

  std::size_t flat(std::size_t h_order) const { return g_index * h_order + h_index; }
  static ProductIndex from_flat(std::size_t flat, std::size_t h_order) { return {flat / h_order, flat % h_order}; }

  friend bool operator==(const ProductIndex&, const ProductIndex&) = default;
};

inline Graph lex_product_graph(const Graph& g, const Graph& h, std::size_t cap = kMaxVertices) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  if (ng * nh > cap || ng * nh > kMaxVertices)
    throw Error(ErrorKind::TooLarge, "product order " + std::to_string(ng * nh) + " exceeds vertex cap " +
                                         std::to_string(cap < kMaxVertices ? cap : kMaxVertices));
  std::vector<VertexSet> adj(ng * nh);
  for (std::size_t a = 0; a < ng; ++a) {
    for (std::size_t x = 0; x < nh; ++x) {
      auto& row = adj[ProductIndex{a, x}.flat(nh)];
      for (auto b : g.neighbors(a).members())
        for (std::size_t y = 0; y < nh; ++y) row.insert(ProductIndex{b, y}.flat(nh));
      for (auto y : h.neighbors(x).members()) row.insert(ProductIndex{a, y}.flat(nh));
    }
  }
  return Graph::from_adjacency(std::move(adj), kMaxVertices);
}

/// profile[j][k] = number of dominating sets A of G with |A| - iso(A) = j and
/// iso(A) = k, where iso(A) is the number of vertices of A with no neighbor
/// in A.
inline std::vector<std::vector<BigInt>> isolation_profile(const Graph& g, const CountOptions& opts = {}) {
  const auto cap = std::min(opts.cap, kMaxEnumerationCap);
  const std::size_t n = g.order();
  if (n > cap)
    throw Error(ErrorKind::TooLarge, "order " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  std::vector<std::uint64_t> open(n), closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    open[v] = g.neighbors(v).word(0);
    closed[v] = g.closed_neighborhood(v).word(0);
  }
  const std::uint64_t full = VertexSet::full(n).word(0);
  std::vector<std::vector<std::uint64_t>> tally(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::uint64_t a = 1; a <= full; ++a) {
    std::uint64_t cover = 0;
    for (std::uint64_t bits = a; bits != 0; bits &= bits - 1) cover |= closed[std::countr_zero(bits)];
    if (cover != full) continue;
    std::size_t iso = 0;
    for (std::uint64_t bits = a; bits != 0; bits &= bits - 1)
      if ((open[std::countr_zero(bits)] & a) == 0) ++iso;
    const auto size = static_cast<std::size_t>(std::popcount(a));
    ++tally[size - iso][iso];
  }
  std::vector<std::vector<BigInt>> out(n + 1, std::vector<BigInt>(n + 1));
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = 0; k <= n; ++k) out[j][k] = tally[j][k];
  return out;
}

enum class LexFormula {
  /// Isolation-refined sum; valid for every G and H.
  General,
  /// D(G, (1 + x)^m - 1); requires H complete.
  Composition,
};

/// D(G[H], x) from D(H) and the isolation profile of G, without building G[H].
inline DominationPolynomial lex_product_polynomial(const Graph& g, const Graph& h,
                                                   LexFormula formula = LexFormula::General,
                                                   const CountOptions& opts = {}) {
  const std::size_t m = h.order();
  const IntPoly layer = IntPoly{1, 1}.pow(m) - IntPoly{1};

  if (formula == LexFormula::Composition) {
    if (h.edge_count() != m * (m - 1) / 2)
      throw Error(ErrorKind::HypothesisNotMet, "H must be a complete graph for D(G[H], x) = D(G, (1+x)^m - 1)");
    const auto dg = count_by_enumeration(g, opts);
    return DominationPolynomial(dg.as_poly().compose(layer).coeffs());
  }

  const IntPoly dh = count_by_enumeration(h, opts).as_poly();
  const auto profile = isolation_profile(g, opts);
  const std::size_t n = g.order();
  std::vector<IntPoly> layer_pow{IntPoly{1}}, dh_pow{IntPoly{1}};
  for (std::size_t k = 1; k <= n; ++k) {
    layer_pow.push_back(layer_pow.back() * layer);
    dh_pow.push_back(dh_pow.back() * dh);
  }
  IntPoly total;
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = 0; j + k <= n; ++k)
      if (profile[j][k] != 0) total += layer_pow[j] * dh_pow[k] * profile[j][k];
  auto coeffs = total.coeffs();
  coeffs.resize(n * m + 1);
  return DominationPolynomial(std::move(coeffs));
}

/// Roots of D(G[K_m], x) = D(G, (1+x)^m - 1) from the roots of D(G): each root
/// w gives the m solutions of (1 + x)^m = 1 + w. Far better conditioned than
/// running the root finder on the expanded product polynomial.
inline ComplexRootSet lex_complete_roots(const DominationPolynomial& dg, std::size_t m,
                                         const RootFinderOptions& opts = {}) {
  if (m == 0) throw Error(ErrorKind::Invalid, "K_m needs m >= 1");
  const auto base = find_all_roots(dg, opts);
  const auto layer = IntPoly{1, 1}.pow(m) - IntPoly{1};
  const auto product = dg.as_poly().compose(layer);

  ComplexRootSet rs;
  rs.zero_multiplicity = base.zero_multiplicity;
  rs.iterations = base.iterations;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  const auto add_solutions = [&](Complex w) {
    const Complex shifted = 1.0 + w;
    const double radius = std::pow(std::abs(shifted), 1.0 / static_cast<double>(m));
    const double angle = std::arg(shifted) / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) {
      // For w = 0 the j = 0 solution is x = 0, already counted above.
      if (w == Complex(0.0) && j == 0) continue;
      Complex x = std::polar(radius, angle + step * static_cast<double>(j)) - 1.0;
      // polar() leaves rounding noise on the real axis
      if (std::abs(x.imag()) < 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + radius)) x.imag(0.0);
      rs.roots.push_back(x);
    }
  };
  for (std::size_t k = 0; k < base.zero_multiplicity; ++k) add_solutions(0.0);
  for (const auto& w : base.roots) add_solutions(w);
  for (const auto& x : rs.roots) rs.residuals.push_back(backward_error(std::span<const BigInt>(product.coeffs()), x));
  mark_clusters(rs, opts.cluster_distance);
  check_residuals(rs, opts);
  return rs;
}

struct ProductReport {
  std::string g6_g;
  std::string g6_h;
  std::string g6_product;
  LexFormula formula = LexFormula::General;
  /// Empty when the formula's hypothesis failed.
  std::optional<DominationPolynomial> formula_polynomial;
  std::string failed_condition;
  DominationPolynomial enumeration_polynomial;
  bool equal = false;
  /// First differing coefficient index when both sides exist and differ.
  std::optional<std::size_t> first_difference;

  bool hypothesis_met() const { return formula_polynomial.has_value(); }
};

/// Formula vs. enumeration on the explicit product graph.
inline ProductReport cross_check_product(const Graph& g, const Graph& h, LexFormula formula = LexFormula::General,
                                         const CountOptions& opts = {}) {
  ProductReport report;
  report.g6_g = to_graph6(g);
  report.g6_h = to_graph6(h);
  report.formula = formula;
  const Graph product = lex_product_graph(g, h);
  report.g6_product = to_graph6(product);
  report.enumeration_polynomial = count_by_enumeration(product, opts);
  try {
    report.formula_polynomial = lex_product_polynomial(g, h, formula, opts);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisNotMet) throw;
    report.failed_condition = e.what();
    return report;
  }
  const auto& lhs = report.formula_polynomial->coeffs();
  const auto& rhs = report.enumeration_polynomial.coeffs();
  for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
    const BigInt l = i < lhs.size() ? lhs[i] : BigInt(0);
    const BigInt r = i < rhs.size() ? rhs[i] : BigInt(0);
    if (l != r) {
      report.first_difference = i;
      break;
    }
  }
  report.equal = !report.first_difference.has_value();
  return report;
}

inline void to_json(nlohmann::json& j, const ProductReport& r) {
  j = nlohmann::json{{"g", r.g6_g},
                     {"h", r.g6_h},
                     {"product", r.g6_product},
                     {"formula", r.formula == LexFormula::General ? "general" : "composition"},
                     {"hypothesis_met", r.hypothesis_met()},
                     {"enumeration", r.enumeration_polynomial},
                     {"equal", r.equal}};
  j["formula_polynomial"] = r.formula_polynomial ? nlohmann::json(*r.formula_polynomial) : nlohmann::json(nullptr);
  if (!r.failed_condition.empty()) j["failed_condition"] = r.failed_condition;
  j["first_difference"] = r.first_difference ? nlohmann::json(*r.first_difference) : nlohmann::json(nullptr);
}

}  // namespace domroots

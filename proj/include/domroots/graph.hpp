#pragma once

// Simple undirected graphs stored as per-vertex neighbor masks.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "domroots/error.hpp"

namespace domroots {

/// Hard upper bound on graph order (two 64-bit words per vertex set).
inline constexpr std::size_t kMaxVertices = 128;
/// Default order cap; graphs up to this size fit a single machine word.
inline constexpr std::size_t kDefaultVertexCap = 64;

/// Set of vertex indices in [0, 128), stored as a two-word mask.
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;

  static constexpr VertexSet from_word(std::uint64_t low) {
    VertexSet s;
    s.words_[0] = low;
    return s;
  }

  static VertexSet of(std::initializer_list<std::size_t> members) {
    VertexSet s;
    for (auto v : members) s.insert(v);
    return s;
  }

  /// {0, ..., n-1}
  static constexpr VertexSet full(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  constexpr void insert(std::size_t v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  constexpr void erase(std::size_t v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  constexpr bool contains(std::size_t v) const {
    return v < kMaxVertices && ((words_[v / 64] >> (v % 64)) & 1u) != 0;
  }

  constexpr std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  constexpr bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  constexpr bool intersects(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }
  constexpr bool subset_of(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  constexpr VertexSet& operator|=(const VertexSet& other) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= other.words_[w];
    return *this;
  }
  constexpr VertexSet& operator&=(const VertexSet& other) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Largest member + 1, or 0 when empty.
  constexpr std::size_t bound() const {
    for (std::size_t w = kWords; w-- > 0;)
      if (words_[w] != 0) return w * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return 0;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < kWords; ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph of order 1..kMaxVertices. Immutable once built.
class Graph {
 public:
  /// Builds a graph from an edge list; duplicates are merged.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::size_t cap = kDefaultVertexCap) {
    check_order(n, cap);
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw Error(ErrorKind::InvalidEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                ") out of range for order " + std::to_string(n));
      if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
    }
    return g;
  }

  /// Builds from raw neighbor masks, checking symmetry and irreflexivity.
  static Graph from_adjacency(std::vector<VertexSet> adj, std::size_t cap = kDefaultVertexCap) {
    const std::size_t n = adj.size();
    check_order(n, cap);
    const auto all = VertexSet::full(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (!adj[v].subset_of(all))
        throw Error(ErrorKind::InvalidEdge, "neighbor of " + std::to_string(v) + " out of range");
      if (adj[v].contains(v)) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(v));
      for (auto u : adj[v].members())
        if (!adj[u].contains(v))
          throw Error(ErrorKind::InvalidGraph, "asymmetric adjacency between " + std::to_string(u) +
                                                   " and " + std::to_string(v));
    }
    Graph g(n);
    g.adj_ = std::move(adj);
    return g;
  }

  std::size_t order() const { return adj_.size(); }

  const VertexSet& neighbors(std::size_t v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
  }

  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

  /// N[v] = adj[v] + {v}
  VertexSet closed_neighborhood(std::size_t v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }

  VertexSet vertices() const { return VertexSet::full(order()); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < order(); ++v)
      for (auto u : adj_[v].members())
        if (v < u) out.emplace_back(v, u);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::size_t n) : adj_(n) {}

  static void check_order(std::size_t n, std::size_t cap) {
    if (n == 0) throw Error(ErrorKind::InvalidGraph, "graphs must have at least one vertex");
    const auto limit = cap < kMaxVertices ? cap : kMaxVertices;
    if (n > limit)
      throw Error(ErrorKind::TooLarge,
                  "order " + std::to_string(n) + " exceeds vertex cap " + std::to_string(limit));
  }

  void check_vertex(std::size_t v) const {
    if (v >= order())
      throw Error(ErrorKind::InvalidVertex,
                  "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
  }

  std::vector<VertexSet> adj_;
};

inline VertexSet closed_neighborhood(const Graph& g, std::size_t v) { return g.closed_neighborhood(v); }

/// True iff every closed neighborhood meets `s`.
inline bool is_dominating(const Graph& g, const VertexSet& s) {
  VertexSet covered;
  for (auto u : s.members()) {
    if (u >= g.order()) continue;
    covered |= g.closed_neighborhood(u);
  }
  return g.vertices().subset_of(covered);
}

/// True iff every vertex lies on at least one 3-cycle.
inline bool every_vertex_in_triangle(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& nv = g.neighbors(v);
    bool found = false;
    for (auto u : nv.members()) {
      if (g.neighbors(u).intersects(nv)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace named {

inline Graph empty(std::size_t n) { return Graph::from_edges(n, {}, kMaxVertices); }

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e, kMaxVertices);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::Invalid, "cycles need at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e, kMaxVertices);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e, kMaxVertices);
}

/// K_{a,b}: part {0..a-1} joined to part {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::Invalid, "both parts of K_{a,b} must be nonempty");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, e, kMaxVertices);
}

/// K_{1,k} with center 0.
inline Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

/// K_1 joined to `copies` disjoint copies of K_m; vertex 0 is the hub.
inline Graph windmill(std::size_t copies, std::size_t clique) {
  if (copies == 0 || clique == 0) throw Error(ErrorKind::Invalid, "windmill needs copies >= 1 and clique >= 1");
  std::vector<Edge> e;
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t base = 1 + c * clique;
    for (std::size_t i = 0; i < clique; ++i) {
      e.emplace_back(0, base + i);
      for (std::size_t j = i + 1; j < clique; ++j) e.emplace_back(base + i, base + j);
    }
  }
  return Graph::from_edges(1 + copies * clique, e, kMaxVertices);
}

/// Friendship graph F_k: k triangles sharing vertex 0.
inline Graph friendship(std::size_t triangles) { return windmill(triangles, 2); }

}  // namespace named

}  // namespace domroots

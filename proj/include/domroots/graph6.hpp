#pragma once

// graph6 reader/writer. Bytes are 63 + a 6-bit value; the body lists the upper
// triangle column by column, (0,1),(0,2),(1,2),(0,3),..., zero-padded to a
// multiple of six bits.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "domroots/error.hpp"
#include "domroots/graph.hpp"

namespace domroots {

namespace graph6_detail {

inline constexpr std::string_view kHeader = ">>graph6<<";

inline int sextet(std::string_view text, std::size_t offset) {
  const auto c = static_cast<unsigned char>(text[offset]);
  if (c < 63 || c > 126) throw ParseError(offset, "byte outside graph6 range 63..126");
  return c - 63;
}

}  // namespace graph6_detail

/// Parses one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted.
inline Graph parse_graph6(std::string_view text, std::size_t cap = kDefaultVertexCap) {
  using graph6_detail::sextet;
  std::size_t pos = 0;
  if (text.starts_with(graph6_detail::kHeader)) pos = graph6_detail::kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError(pos, "missing order byte");

  std::size_t n = 0;
  const std::size_t header_at = pos;
  if (text[pos] == 126) {
    if (pos + 1 < text.size() && text[pos + 1] == 126)
      throw ParseError(pos, "orders above 258047 are not supported");
    if (pos + 4 > text.size()) throw ParseError(text.size(), "truncated 4-byte order header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos + k));
    if (n < 63) throw ParseError(header_at, "non-canonical long order header");
    pos += 4;
  } else {
    n = static_cast<std::size_t>(sextet(text, pos));
    pos += 1;
  }
  if (n == 0) throw ParseError(header_at, "graphs with zero vertices are not supported");
  if (n > cap || n > kMaxVertices)
    throw ParseError(header_at, "order " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap < kMaxVertices ? cap : kMaxVertices));

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body)
    throw ParseError(text.size() < pos + body ? text.size() : pos + body,
                     "body length " + std::to_string(text.size() - pos) + " does not match expected " +
                         std::to_string(body) + " for order " + std::to_string(n));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int value = sextet(text, pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < body * 6; ++k) {
    const int value = sextet(text, pos + k / 6);
    if ((value >> (5 - k % 6)) & 1) throw ParseError(pos + k / 6, "nonzero padding bits");
  }
  return Graph::from_edges(n, edges, kMaxVertices);
}

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace domroots

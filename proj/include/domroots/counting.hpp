#pragma once

// Exact domination polynomials by exhaustive subset enumeration and, as an
// independent cross-check, by inclusion-exclusion over undominated witnesses:
//
//   d(G, i) = sum over W of (-1)^|W| * C(n - |N[W]|, i)

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "domroots/bigint.hpp"
#include "domroots/error.hpp"
#include "domroots/graph.hpp"
#include "domroots/polynomial.hpp"

namespace domroots {

inline constexpr std::size_t kDefaultEnumerationCap = 28;
/// Largest cap accepted as an explicit override.
inline constexpr std::size_t kMaxEnumerationCap = 32;

struct CountOptions {
  /// 0 means std::thread::hardware_concurrency().
  std::size_t workers = 0;
  std::size_t cap = kDefaultEnumerationCap;
};

/// Pascal's triangle in exact arithmetic, rows 0..max_n.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t max_n) : rows_(max_n + 1) {
    for (std::size_t a = 0; a <= max_n; ++a) {
      rows_[a].assign(a + 1, BigInt(1));
      for (std::size_t i = 1; i < a; ++i) rows_[a][i] = rows_[a - 1][i - 1] + rows_[a - 1][i];
    }
  }

  const BigInt& operator()(std::size_t a, std::size_t i) const {
    static const BigInt zero = 0;
    return i <= a ? rows_[a][i] : zero;
  }

  std::size_t max_n() const { return rows_.size() - 1; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

inline const BinomialTable& binomials() {
  static const BinomialTable table(kMaxVertices);
  return table;
}

namespace counting_detail {

inline std::size_t resolve_workers(std::size_t requested) {
  if (requested != 0) return requested;
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

inline void check_cap(const Graph& g, const CountOptions& opts) {
  const auto cap = std::min(opts.cap, kMaxEnumerationCap);
  if (g.order() > cap)
    throw Error(ErrorKind::TooLarge, "order " + std::to_string(g.order()) + " exceeds enumeration cap " +
                                         std::to_string(cap));
}

inline std::vector<std::uint64_t> closed_masks(const Graph& g) {
  std::vector<std::uint64_t> masks(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) masks[v] = g.closed_neighborhood(v).word(0);
  return masks;
}

/// Splits [lo, hi) into maximal aligned blocks {prefix + [0, 2^free)} and
/// calls visit(prefix, free) for each in ascending order.
template <class Visit>
void for_aligned_blocks(std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  while (lo < hi) {
    unsigned free = lo == 0 ? 63u : static_cast<unsigned>(std::countr_zero(lo));
    while (free > 0 && (free >= 64 || lo + (std::uint64_t{1} << free) > hi)) --free;
    visit(lo, free);
    lo += std::uint64_t{1} << free;
  }
}

/// Per-size dominating-set counts over subsets whose bit patterns lie in
/// [lo, hi). Subsets sharing high bits are explored depth-first over the low
/// bits, carrying the OR of closed neighborhoods.
class DominationKernel {
 public:
  explicit DominationKernel(const Graph& g)
      : n_(g.order()),
        masks_(closed_masks(g)),
        full_(VertexSet::full(n_).word(0)),
        reach_(n_ + 1, 0),
        pascal_(n_ + 1) {
    for (std::size_t r = 1; r <= n_; ++r) reach_[r] = reach_[r - 1] | masks_[r - 1];
    for (std::size_t a = 0; a <= n_; ++a) {
      pascal_[a].assign(a + 1, 1);
      for (std::size_t i = 1; i < a; ++i) pascal_[a][i] = pascal_[a - 1][i - 1] + pascal_[a - 1][i];
    }
  }

  /// counts[i] += #dominating i-subsets with index in [lo, hi)
  void count_range(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& counts) const {
    counts.resize(n_ + 1, 0);
    for_aligned_blocks(lo, hi, [&](std::uint64_t prefix, unsigned free) {
      std::uint64_t cover = 0;
      unsigned size = 0;
      for (std::size_t v = free; v < n_; ++v) {
        if ((prefix >> v) & 1u) {
          cover |= masks_[v];
          ++size;
        }
      }
      descend(free, cover, size, counts);
    });
  }

 private:
  // Vertices 0..free-1 are undecided.
  void descend(unsigned free, std::uint64_t cover, unsigned size, std::vector<std::uint64_t>& counts) const {
    if (cover == full_) {
      // Every completion dominates.
      for (unsigned j = 0; j <= free; ++j) counts[size + j] += pascal_[free][j];
      return;
    }
    if (free == 0 || (cover | reach_[free]) != full_) return;
    descend(free - 1, cover | masks_[free - 1], size + 1, counts);
    descend(free - 1, cover, size, counts);
  }

  std::size_t n_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t full_;
  std::vector<std::uint64_t> reach_;
  std::vector<std::vector<std::uint64_t>> pascal_;
};

/// Signed tally t[k] = sum over witness sets W with n - |N[W]| = k of (-1)^|W|,
/// restricted to W with index in [lo, hi). Visits every W; no pruning.
class WitnessKernel {
 public:
  explicit WitnessKernel(const Graph& g) : n_(g.order()), masks_(closed_masks(g)) {}

  void tally_range(std::uint64_t lo, std::uint64_t hi, std::vector<std::int64_t>& tally) const {
    tally.resize(n_ + 1, 0);
    for_aligned_blocks(lo, hi, [&](std::uint64_t prefix, unsigned free) {
      std::uint64_t reach = 0;
      unsigned size = 0;
      for (std::size_t v = free; v < n_; ++v) {
        if ((prefix >> v) & 1u) {
          reach |= masks_[v];
          ++size;
        }
      }
      descend(free, reach, size, tally);
    });
  }

 private:
  void descend(unsigned free, std::uint64_t reach, unsigned size, std::vector<std::int64_t>& tally) const {
    if (free == 0) {
      const auto outside = n_ - static_cast<std::size_t>(std::popcount(reach));
      tally[outside] += (size % 2 == 0) ? 1 : -1;
      return;
    }
    descend(free - 1, reach | masks_[free - 1], size + 1, tally);
    descend(free - 1, reach, size, tally);
  }

  std::size_t n_;
  std::vector<std::uint64_t> masks_;
};

/// Runs `work(lo, hi, local)` over disjoint chunks of [0, 2^n) on a pool of
/// threads and sums the per-chunk vectors in chunk order.
template <class T, class Work>
std::vector<T> parallel_reduce(std::size_t n, std::size_t workers, Work&& work) {
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::size_t threads = std::max<std::size_t>(1, workers);
  std::uint64_t chunks = std::min<std::uint64_t>(total, threads * 16);
  if (chunks == 0) chunks = 1;
  std::vector<std::vector<T>> partial(chunks, std::vector<T>(n + 1, T{0}));
  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t lo = total / chunks * c + std::min(c, total % chunks);
      const std::uint64_t hi = lo + total / chunks + (c < total % chunks ? 1 : 0);
      work(lo, hi, partial[c]);
    }
  };
  if (threads == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run);
  }
  std::vector<T> sum(n + 1, T{0});
  for (const auto& p : partial)
    for (std::size_t i = 0; i <= n; ++i) sum[i] += p[i];
  return sum;
}

}  // namespace counting_detail

/// Dominating-set counts over the subset-index range [lo, hi) only; summing
/// the results of a partition of [0, 2^n) gives the full polynomial.
inline std::vector<BigInt> count_dominating_in_range(const Graph& g, std::uint64_t lo, std::uint64_t hi,
                                                     const CountOptions& opts = {}) {
  counting_detail::check_cap(g, opts);
  std::vector<std::uint64_t> counts;
  counting_detail::DominationKernel(g).count_range(lo, hi, counts);
  return {counts.begin(), counts.end()};
}

inline DominationPolynomial count_by_enumeration(const Graph& g, const CountOptions& opts = {}) {
  counting_detail::check_cap(g, opts);
  const counting_detail::DominationKernel kernel(g);
  const auto sums = counting_detail::parallel_reduce<std::uint64_t>(
      g.order(), counting_detail::resolve_workers(opts.workers),
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& local) {
        kernel.count_range(lo, hi, local);
      });
  return DominationPolynomial(std::vector<BigInt>(sums.begin(), sums.end()));
}

inline DominationPolynomial count_by_inclusion_exclusion(const Graph& g, const CountOptions& opts = {}) {
  counting_detail::check_cap(g, opts);
  const counting_detail::WitnessKernel kernel(g);
  const auto tally = counting_detail::parallel_reduce<std::int64_t>(
      g.order(), counting_detail::resolve_workers(opts.workers),
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::int64_t>& local) {
        kernel.tally_range(lo, hi, local);
      });
  const std::size_t n = g.order();
  const auto& pascal = binomials();
  std::vector<BigInt> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (tally[k] == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) coeffs[i] += pascal(k, i) * tally[k];
  }
  return DominationPolynomial(std::move(coeffs));
}

/// D(G, x), computed by enumeration.
inline DominationPolynomial domination_polynomial(const Graph& g, const CountOptions& opts = {}) {
  return count_by_enumeration(g, opts);
}

}  // namespace domroots

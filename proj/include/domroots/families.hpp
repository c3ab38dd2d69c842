#pragma once

// Parameterized graph families, batch certification sweeps and root clouds.
//
// paper_sec2: friendship graphs F_k = K_1 joined to k disjoint edges, k odd
//   and k >= 7. Every vertex lies on a triangle; odd k gives no nonzero real
//   domination roots and from k = 7 on there are roots with positive real
//   part.
// paper_sec4: K_{1,k}[K_m], the lexicographic product of a star with a
//   complete graph; its polynomial is D(K_{1,k}, (1+x)^m - 1).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "domroots/counting.hpp"
#include "domroots/error.hpp"
#include "domroots/graph.hpp"
#include "domroots/lexprod.hpp"
#include "domroots/polynomial.hpp"
#include "domroots/roots.hpp"
#include "domroots/sturm.hpp"

namespace domroots {

enum class FamilyId { Path, Cycle, Complete, CompleteBipartite, Star, Windmill, PaperSec2, PaperSec4 };

inline constexpr std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::Path: return "path";
    case FamilyId::Cycle: return "cycle";
    case FamilyId::Complete: return "complete";
    case FamilyId::CompleteBipartite: return "complete_bipartite";
    case FamilyId::Star: return "star";
    case FamilyId::Windmill: return "windmill";
    case FamilyId::PaperSec2: return "paper_sec2";
    case FamilyId::PaperSec4: return "paper_sec4";
  }
  return "unknown";
}

inline FamilyId parse_family(std::string_view name) {
  for (auto id : {FamilyId::Path, FamilyId::Cycle, FamilyId::Complete, FamilyId::CompleteBipartite, FamilyId::Star,
                  FamilyId::Windmill, FamilyId::PaperSec2, FamilyId::PaperSec4})
    if (name == to_string(id)) return id;
  throw Error(ErrorKind::InvalidSpec, "unknown family '" + std::string(name) + "'");
}

/// Family plus integer parameters. Parameter meaning per family:
///   path [n>=1], cycle [n>=3], complete [n>=1], complete_bipartite [a>=1, b>=1],
///   star [k>=1], windmill [copies>=1, clique>=1], paper_sec2 [k odd, k>=7],
///   paper_sec4 [k>=1, m>=1] (m defaults to 2).
struct FamilySpec {
  FamilyId family = FamilyId::Path;
  std::vector<long> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  friend auto operator<=>(const FamilySpec& a, const FamilySpec& b) {
    return std::tie(a.family, a.params) <=> std::tie(b.family, b.params);
  }

  std::string label() const {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? ":" : "") + std::to_string(params[i]);
    return out;
  }
};

namespace families_detail {

inline std::size_t param(const FamilySpec& spec, std::size_t i, long min_value, std::optional<long> fallback = {}) {
  long value = 0;
  if (i < spec.params.size()) {
    value = spec.params[i];
  } else if (fallback) {
    value = *fallback;
  } else {
    throw Error(ErrorKind::InvalidSpec,
                std::string(to_string(spec.family)) + " needs parameter " + std::to_string(i + 1));
  }
  if (value < min_value)
    throw Error(ErrorKind::InvalidSpec, std::string(to_string(spec.family)) + " parameter " + std::to_string(i + 1) +
                                            " must be >= " + std::to_string(min_value));
  return static_cast<std::size_t>(value);
}

inline void expect_arity(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.params.size() < lo || spec.params.size() > hi)
    throw Error(ErrorKind::InvalidSpec, std::string(to_string(spec.family)) + " takes " + std::to_string(lo) +
                                            (lo == hi ? "" : "-" + std::to_string(hi)) + " parameter(s)");
}

inline std::size_t order_of(const FamilySpec& spec) {
  using F = FamilyId;
  switch (spec.family) {
    case F::Path:
    case F::Complete: return param(spec, 0, 1);
    case F::Cycle: return param(spec, 0, 3);
    case F::CompleteBipartite: return param(spec, 0, 1) + param(spec, 1, 1);
    case F::Star: return param(spec, 0, 1) + 1;
    case F::Windmill: return 1 + param(spec, 0, 1) * param(spec, 1, 1);
    case F::PaperSec2: return 1 + 2 * param(spec, 0, 7);
    case F::PaperSec4: return (param(spec, 0, 1) + 1) * param(spec, 1, 1, 2);
  }
  return 0;
}

inline void validate(const FamilySpec& spec) {
  using F = FamilyId;
  switch (spec.family) {
    case F::Path:
    case F::Cycle:
    case F::Complete:
    case F::Star:
    case F::PaperSec2: expect_arity(spec, 1, 1); break;
    case F::CompleteBipartite:
    case F::Windmill: expect_arity(spec, 2, 2); break;
    case F::PaperSec4: expect_arity(spec, 1, 2); break;
  }
  if (spec.family == F::PaperSec2 && param(spec, 0, 7) % 2 == 0)
    throw Error(ErrorKind::InvalidSpec, "paper_sec2 needs an odd number of triangles");
  const auto n = order_of(spec);
  if (n > kMaxVertices)
    throw Error(ErrorKind::InvalidSpec, std::string(to_string(spec.family)) + " member of order " +
                                            std::to_string(n) + " exceeds vertex cap");
}

}  // namespace families_detail

/// Deterministic member graph for a spec.
inline Graph generate(const FamilySpec& spec) {
  using namespace families_detail;
  validate(spec);
  using F = FamilyId;
  switch (spec.family) {
    case F::Path: return named::path(param(spec, 0, 1));
    case F::Cycle: return named::cycle(param(spec, 0, 3));
    case F::Complete: return named::complete(param(spec, 0, 1));
    case F::CompleteBipartite: return named::complete_bipartite(param(spec, 0, 1), param(spec, 1, 1));
    case F::Star: return named::star(param(spec, 0, 1));
    case F::Windmill: return named::windmill(param(spec, 0, 1), param(spec, 1, 1));
    case F::PaperSec2: return named::friendship(param(spec, 0, 7));
    case F::PaperSec4:
      return lex_product_graph(named::star(param(spec, 0, 1)), named::complete(param(spec, 1, 1, 2)));
  }
  throw Error(ErrorKind::InvalidSpec, "unhandled family");
}

/// D(G, x) of a member. paper_sec4 goes through the product formula, so its
/// order may exceed the enumeration cap as long as the star factor does not.
inline DominationPolynomial member_polynomial(const FamilySpec& spec, const CountOptions& opts = {}) {
  using namespace families_detail;
  if (spec.family == FamilyId::PaperSec4) {
    validate(spec);
    return lex_product_polynomial(named::star(param(spec, 0, 1)), named::complete(param(spec, 1, 1, 2)),
                                  LexFormula::Composition, opts);
  }
  return count_by_enumeration(generate(spec), opts);
}

/// Roots of a member's polynomial. paper_sec4 roots are derived from the
/// star's roots through the product structure.
inline ComplexRootSet member_roots(const FamilySpec& spec, const CountOptions& counting = {},
                                   const RootFinderOptions& opts = {}) {
  using namespace families_detail;
  if (spec.family == FamilyId::PaperSec4) {
    validate(spec);
    return lex_complete_roots(count_by_enumeration(named::star(param(spec, 0, 1)), counting),
                              param(spec, 1, 1, 2), opts);
  }
  return find_all_roots(member_polynomial(spec, counting), opts);
}

/// Members obtained by setting the first parameter to first, first+step, ...,
/// last; remaining parameters come from `base`.
struct FamilySweep {
  FamilySpec base;
  long first = 1;
  long last = 0;
  long step = 1;

  std::vector<FamilySpec> members() const {
    if (step <= 0) throw Error(ErrorKind::InvalidSpec, "sweep step must be positive");
    std::vector<FamilySpec> out;
    for (long k = first; k <= last; k += step) {
      FamilySpec s = base;
      if (s.params.empty())
        s.params.push_back(k);
      else
        s.params[0] = k;
      out.push_back(std::move(s));
    }
    return out;
  }
};

struct SweepOptions {
  CountOptions counting{};
  RootFinderOptions roots{};
  double tol = 1e-9;
  /// Members processed concurrently; 0 means hardware concurrency.
  std::size_t workers = 0;
};

namespace families_detail {

/// Applies fn to each member on a small pool; results keep member order.
template <class Result, class Fn>
std::vector<Result> map_members(const std::vector<FamilySpec>& members, std::size_t workers, Fn&& fn) {
  std::vector<Result> out(members.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < members.size(); i = next++) out[i] = fn(members[i]);
  };
  const std::size_t threads = std::min(counting_detail::resolve_workers(workers), std::max<std::size_t>(1, members.size()));
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run);
  }
  return out;
}

// Member-level parallelism already saturates the pool.
inline CountOptions inner(const SweepOptions& opts) {
  CountOptions c = opts.counting;
  c.workers = 1;
  return c;
}

}  // namespace families_detail

struct MemberCertificate {
  FamilySpec spec;
  std::optional<DominationPolynomial> polynomial;
  /// Distinct nonzero real roots, exact.
  std::size_t real_root_count = 0;
  bool passed = false;
  std::string error;
};

/// Exact Sturm certificate of "no nonzero real roots" for each member.
inline std::vector<MemberCertificate> verify_no_nonzero_real_roots(const FamilySweep& sweep,
                                                                  const SweepOptions& opts = {}) {
  return families_detail::map_members<MemberCertificate>(sweep.members(), opts.workers, [&](const FamilySpec& spec) {
    MemberCertificate cert;
    cert.spec = spec;
    try {
      cert.polynomial = member_polynomial(spec, families_detail::inner(opts));
      cert.real_root_count = sturm_real_root_count(*cert.polynomial, Bound::neg_inf(), Bound::pos_inf()).count;
      cert.passed = certify_no_nonzero_real_roots(*cert.polynomial);
    } catch (const Error& e) {
      cert.error = e.what();
    }
    return cert;
  });
}

struct MemberRootFlag {
  FamilySpec spec;
  bool has_positive_real_part = false;
  double max_real_part = 0.0;
  std::string error;
};

inline std::vector<MemberRootFlag> verify_positive_real_part(const FamilySweep& sweep, const SweepOptions& opts = {}) {
  return families_detail::map_members<MemberRootFlag>(sweep.members(), opts.workers, [&](const FamilySpec& spec) {
    MemberRootFlag flag;
    flag.spec = spec;
    try {
      const auto cls = classify(member_roots(spec, families_detail::inner(opts), opts.roots), opts.tol);
      flag.has_positive_real_part = cls.has_positive_real_part;
      flag.max_real_part = cls.max_real_part;
    } catch (const Error& e) {
      flag.error = e.what();
    }
    return flag;
  });
}

struct CloudPoint {
  double re = 0.0;
  double im = 0.0;
  FamilySpec spec;
  std::size_t multiplicity = 1;
  double residual = 0.0;
};

/// Closed-open rectangle [re_min, re_max) x [im_min, im_max).
struct Window {
  double re_min = -3.0;
  double re_max = 3.0;
  double im_min = -3.0;
  double im_max = 3.0;

  bool degenerate() const { return !(re_min < re_max) || !(im_min < im_max); }
};

struct MemberError {
  FamilySpec spec;
  ErrorKind kind = ErrorKind::Invalid;
  std::string message;
};

/// Nonzero domination roots of many members, with provenance. Points within
/// a cluster are merged into one point carrying their multiplicity.
class RootCloud {
 public:
  const std::vector<CloudPoint>& points() const { return points_; }
  const std::vector<MemberError>& errors() const { return errors_; }
  bool empty() const { return points_.empty(); }

  void add_roots(const FamilySpec& spec, const ComplexRootSet& rs, double merge_distance = 1e-4) {
    std::vector<bool> taken(rs.roots.size(), false);
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      Complex sum = rs.roots[i];
      std::size_t count = 1;
      double residual = rs.residuals.at(i);
      for (std::size_t j = i + 1; j < rs.roots.size(); ++j) {
        if (!taken[j] && std::abs(rs.roots[j] - rs.roots[i]) < merge_distance) {
          taken[j] = true;
          sum += rs.roots[j];
          ++count;
          residual = std::max(residual, rs.residuals.at(j));
        }
      }
      const Complex centre = sum / static_cast<double>(count);
      points_.push_back({centre.real(), centre.imag(), spec, count, residual});
    }
    cache_.clear();
  }

  void add_error(MemberError error) { errors_.push_back(std::move(error)); }

  void merge(const RootCloud& other) {
    points_.insert(points_.end(), other.points_.begin(), other.points_.end());
    errors_.insert(errors_.end(), other.errors_.begin(), other.errors_.end());
    cache_.clear();
  }

  /// Orders points by (family, params, re, im).
  void sort() {
    std::sort(points_.begin(), points_.end(), [](const CloudPoint& a, const CloudPoint& b) {
      return std::tie(a.spec, a.re, a.im) < std::tie(b.spec, b.re, b.im);
    });
  }

  /// Fraction of the grid x grid cells of `window` containing a point.
  double coverage(const Window& window, std::size_t grid) const {
    if (grid == 0) throw Error(ErrorKind::Invalid, "grid must be >= 1");
    if (window.degenerate()) throw Error(ErrorKind::Invalid, "window is degenerate");
    const auto key = std::make_tuple(window.re_min, window.re_max, window.im_min, window.im_max, grid);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::vector<bool> hit(grid * grid, false);
    std::size_t cells = 0;
    const double g = static_cast<double>(grid);
    for (const auto& p : points_) {
      if (!(p.re >= window.re_min && p.re < window.re_max && p.im >= window.im_min && p.im < window.im_max))
        continue;
      auto col = static_cast<std::size_t>((p.re - window.re_min) / (window.re_max - window.re_min) * g);
      auto row = static_cast<std::size_t>((p.im - window.im_min) / (window.im_max - window.im_min) * g);
      col = std::min(col, grid - 1);
      row = std::min(row, grid - 1);
      if (!hit[row * grid + col]) {
        hit[row * grid + col] = true;
        ++cells;
      }
    }
    const double fraction = static_cast<double>(cells) / (g * g);
    cache_.emplace(key, fraction);
    return fraction;
  }

  /// CSV with header re,im,family,param,multiplicity.
  std::string to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "re,im,family,param,multiplicity\n";
    for (const auto& p : points_)
      out << p.re << ',' << p.im << ',' << to_string(p.spec.family) << ',' << p.spec.label() << ',' << p.multiplicity
          << '\n';
    return out.str();
  }

 private:
  std::vector<CloudPoint> points_;
  std::vector<MemberError> errors_;
  mutable std::map<std::tuple<double, double, double, double, std::size_t>, double> cache_;
};

inline double coverage(const RootCloud& cloud, const Window& window, std::size_t grid) {
  return cloud.coverage(window, grid);
}

/// Roots of one member, added to a fresh cloud; errors are recorded, not thrown.
inline RootCloud member_cloud(const FamilySpec& spec, const SweepOptions& opts = {}) {
  RootCloud cloud;
  try {
    cloud.add_roots(spec, member_roots(spec, families_detail::inner(opts), opts.roots), opts.roots.cluster_distance);
  } catch (const Error& e) {
    cloud.add_error({spec, e.kind(), e.what()});
  }
  return cloud;
}

/// All nonzero roots of every member of the sweep; failing members are
/// listed in errors() and the batch continues.
inline RootCloud collect_roots(const FamilySweep& sweep, const SweepOptions& opts = {}) {
  const auto parts = families_detail::map_members<RootCloud>(
      sweep.members(), opts.workers, [&](const FamilySpec& spec) { return member_cloud(spec, opts); });
  RootCloud cloud;
  for (const auto& part : parts) cloud.merge(part);
  cloud.sort();
  return cloud;
}

struct CoverageStep {
  FamilySpec last_member;
  std::size_t points = 0;
  double coverage = 0.0;
};

/// Coverage of the cumulative cloud after each member, in sweep order.
inline std::vector<CoverageStep> cumulative_coverage(const FamilySweep& sweep, const Window& window,
                                                     std::size_t grid, const SweepOptions& opts,
                                                     RootCloud* total = nullptr) {
  const auto members = sweep.members();
  const auto parts = families_detail::map_members<RootCloud>(
      members, opts.workers, [&](const FamilySpec& spec) { return member_cloud(spec, opts); });
  RootCloud cloud;
  std::vector<CoverageStep> steps;
  for (std::size_t i = 0; i < members.size(); ++i) {
    cloud.merge(parts[i]);
    steps.push_back({members[i], cloud.points().size(), cloud.coverage(window, grid)});
  }
  cloud.sort();
  if (total != nullptr) *total = std::move(cloud);
  return steps;
}

inline void to_json(nlohmann::json& j, const FamilySpec& s) {
  j = nlohmann::json{{"family", to_string(s.family)}, {"params", s.params}};
}

inline void to_json(nlohmann::json& j, const MemberCertificate& c) {
  j = nlohmann::json{{"member", c.spec}, {"passed", c.passed}, {"real_root_count", c.real_root_count}};
  j["polynomial"] = c.polynomial ? nlohmann::json(*c.polynomial) : nlohmann::json(nullptr);
  if (!c.error.empty()) j["error"] = c.error;
}

inline void to_json(nlohmann::json& j, const MemberRootFlag& f) {
  j = nlohmann::json{{"member", f.spec}, {"has_positive_real_part", f.has_positive_real_part}};
  j["max_real_part"] = f.error.empty() ? nlohmann::json(f.max_real_part) : nlohmann::json(nullptr);
  if (!f.error.empty()) j["error"] = f.error;
}

inline void to_json(nlohmann::json& j, const MemberError& e) {
  j = nlohmann::json{{"member", e.spec}, {"kind", to_string(e.kind)}, {"message", e.message}};
}

inline void to_json(nlohmann::json& j, const Window& w) {
  j = nlohmann::json{{"re_min", w.re_min}, {"re_max", w.re_max}, {"im_min", w.im_min}, {"im_max", w.im_max}};
}

}  // namespace domroots

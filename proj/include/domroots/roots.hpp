#pragma once

// Numeric location of all complex roots: exact squarefree factorization, then
// Aberth-Ehrlich simultaneous iteration on each factor with Newton polishing,
// plus root-geometry classification.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "domroots/bigint.hpp"
#include "domroots/error.hpp"
#include "domroots/polynomial.hpp"

namespace domroots {

using Complex = std::complex<double>;

struct RootFinderOptions {
  std::size_t max_iterations = 200;
  /// A root is settled once its correction is below step_tolerance * (1 + |z|).
  double step_tolerance = 1e-13;
  std::size_t polish_steps = 5;
  /// Backward-error bound for isolated roots.
  double residual_tolerance = 1e-12;
  /// Backward-error bound for roots inside a cluster (multiple roots).
  double cluster_residual_tolerance = 1e-8;
  /// Roots closer than this are flagged as a cluster.
  double cluster_distance = 1e-4;
};

/// Roots of p(x) / x^zero_multiplicity. residuals[k] is the normwise backward
/// error |p(z)| / sum |a_i| |z|^i of roots[k].
struct ComplexRootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;
  std::vector<bool> clustered;
  std::size_t zero_multiplicity = 0;
  std::size_t iterations = 0;

  std::size_t degree() const { return roots.size() + zero_multiplicity; }
  bool has_clusters() const { return std::find(clustered.begin(), clustered.end(), true) != clustered.end(); }
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, ComplexRootSet best)
      : Error(ErrorKind::NoConvergence, what), best_(std::move(best)) {}

  const ComplexRootSet& best() const noexcept { return best_; }

 private:
  ComplexRootSet best_;
};

namespace roots_detail {

/// Coefficients divided by the largest magnitude.
template <class Real>
std::vector<Real> normalized(std::span<const BigInt> coeffs) {
  BigInt largest = 0;
  for (const auto& c : coeffs) largest = std::max(largest, BigInt(boost::multiprecision::abs(c)));
  std::vector<Real> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(Rational(c, largest).convert_to<Real>());
  return out;
}

/// Newton ratio p(z)/p'(z); evaluated in 1/z when |z| > 1 to avoid overflow.
template <class Real>
std::complex<Real> newton_ratio(const std::vector<Real>& a, std::complex<Real> z) {
  using C = std::complex<Real>;
  const std::size_t d = a.size() - 1;
  if (std::abs(z) <= Real(1)) {
    C p = a[d], dp = Real(0);
    for (std::size_t i = d; i-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[i];
    }
    return p / dp;
  }
  // p(z) = z^d r(w), r(w) = sum a[d-i] w^i, w = 1/z.
  const C w = Real(1) / z;
  C r = a[0], dr = Real(0);
  for (std::size_t i = 1; i <= d; ++i) {
    dr = dr * w + r;
    r = r * w + a[i];
  }
  // p'/p = (d - w r'/r) / z
  return z / (static_cast<Real>(d) - w * dr / r);
}

template <class Real>
Real backward_error(const std::vector<Real>& a, std::complex<Real> z) {
  std::complex<Real> p = Real(0);
  Real scale = 0;
  const Real mag = std::abs(z);
  if (mag <= Real(1)) {
    for (std::size_t i = a.size(); i-- > 0;) {
      p = p * z + a[i];
      scale = scale * mag + std::abs(a[i]);
    }
  } else {
    const std::complex<Real> w = Real(1) / z;
    const Real wm = Real(1) / mag;
    for (std::size_t i = 0; i < a.size(); ++i) {
      p = p * w + a[i];
      scale = scale * wm + std::abs(a[i]);
    }
  }
  return scale == Real(0) ? Real(0) : std::abs(p) / scale;
}

/// Positive root of |a_d| x^d = sum_{i<d} |a_i| x^i; every root has modulus at
/// most this value.
template <class Real>
Real cauchy_radius(const std::vector<Real>& a) {
  const std::size_t d = a.size() - 1;
  // Sign of |a_d| - sum_{i<d} |a_i| x^(i-d), which is increasing in x.
  const auto f = [&](Real x) {
    Real tail = 0;
    const Real inv = Real(1) / x;
    for (std::size_t i = 0; i < d; ++i) tail = (tail + std::abs(a[i])) * inv;
    return std::abs(a[d]) - tail;
  };
  Real hi = 1;
  while (f(hi) <= 0) hi *= 2;
  Real lo = 0;
  for (int it = 0; it < 200 && hi - lo > Real(1e-12) * hi; ++it) {
    const Real mid = (lo + hi) / 2;
    (f(mid) > 0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace roots_detail

/// Flags roots lying within `distance` of another root.
inline void mark_clusters(ComplexRootSet& rs, double distance) {
  rs.clustered.assign(rs.roots.size(), false);
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    for (std::size_t j = i + 1; j < rs.roots.size(); ++j)
      if (std::abs(rs.roots[i] - rs.roots[j]) < distance) rs.clustered[i] = rs.clustered[j] = true;
}

/// Componentwise backward error |p(z)| / sum |c_i| |z|^i, in extended precision.
inline double backward_error(std::span<const BigInt> coeffs, Complex z) {
  const auto a = roots_detail::normalized<long double>(coeffs);
  return static_cast<double>(roots_detail::backward_error(a, std::complex<long double>(z.real(), z.imag())));
}

inline void check_residuals(ComplexRootSet& rs, const RootFinderOptions& opts);

namespace roots_detail {

/// Aberth-Ehrlich on a polynomial with nonzero constant term and degree >= 1,
/// then Newton polishing in extended precision.
inline std::vector<Complex> aberth(std::span<const BigInt> coeffs, const RootFinderOptions& opts,
                                   std::size_t& iterations) {
  using Ext = std::complex<long double>;
  const auto a = normalized<long double>(coeffs);
  const std::size_t d = a.size() - 1;
  std::vector<Ext> z(d);
  if (d == 1) {
    z[0] = Ext(-a[0] / a[1], 0.0L);
  } else {
    const long double radius = cauchy_radius(a);
    // Fixed angular offset keeps starts off the real axis and deterministic.
    constexpr long double kOffset = 0.4L;
    for (std::size_t k = 0; k < d; ++k) {
      const long double theta =
          2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(d) + kOffset;
      z[k] = std::polar(radius, theta);
    }
    // Backward error at which further corrections are rounding noise.
    const long double noise_floor =
        4.0L * static_cast<long double>(d) * std::numeric_limits<long double>::epsilon();
    std::vector<bool> settled(d, false);
    std::size_t it = 0;
    for (; it < opts.max_iterations; ++it) {
      bool all = true;
      for (std::size_t k = 0; k < d; ++k) {
        if (settled[k]) continue;
        const Ext ratio = newton_ratio(a, z[k]);
        Ext repulsion = 0.0L;
        for (std::size_t j = 0; j < d; ++j)
          if (j != k) repulsion += 1.0L / (z[k] - z[j]);
        const Ext step = ratio / (1.0L - ratio * repulsion);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
          settled[k] = true;
          continue;
        }
        z[k] -= step;
        if (std::abs(step) < opts.step_tolerance * (1.0L + std::abs(z[k])) ||
            backward_error(a, z[k]) <= noise_floor)
          settled[k] = true;
        else
          all = false;
      }
      if (all) break;
    }
    iterations = std::max(iterations, it);
  }

  std::vector<Complex> out;
  out.reserve(d);
  for (Ext root : z) {
    long double best = backward_error(a, root);
    for (std::size_t s = 0; s < opts.polish_steps && best > 0.0L; ++s) {
      const Ext ratio = newton_ratio(a, root);
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) break;
      const Ext next = root - ratio;
      const long double err = backward_error(a, next);
      if (!(err < best)) break;
      root = next;
      best = err;
    }
    out.emplace_back(static_cast<double>(root.real()), static_cast<double>(root.imag()));
  }
  return out;
}

}  // namespace roots_detail

/// All complex roots of sum coeffs[i] x^i (real integer coefficients, not all
/// zero). Zero roots are deflated and counted in zero_multiplicity. Repeated
/// roots are split off exactly by squarefree factorization first, so a root of
/// multiplicity k appears k times with the same value.
inline ComplexRootSet find_all_roots(std::span<const BigInt> coeffs, const RootFinderOptions& opts = {}) {
  using namespace roots_detail;
  std::size_t lo = 0;
  while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
  std::size_t hi = coeffs.size();
  while (hi > lo && coeffs[hi - 1] == 0) --hi;
  if (lo == hi) throw Error(ErrorKind::Invalid, "cannot find roots of the zero polynomial");
  if (hi - 1 == 0) throw Error(ErrorKind::Invalid, "polynomial must have degree >= 1");

  ComplexRootSet rs;
  rs.zero_multiplicity = lo;
  const auto span = coeffs.subspan(lo, hi - lo);
  if (span.size() == 1) return rs;

  const IntPoly deflated(std::vector<BigInt>(span.begin(), span.end()));
  for (const auto& [factor, multiplicity] : squarefree_factorization(deflated)) {
    const auto found = aberth(std::span<const BigInt>(factor.coeffs()), opts, rs.iterations);
    for (std::size_t m = 0; m < multiplicity; ++m) rs.roots.insert(rs.roots.end(), found.begin(), found.end());
  }
  const auto a = normalized<long double>(span);
  rs.residuals.reserve(rs.roots.size());
  for (const auto& r : rs.roots)
    rs.residuals.push_back(static_cast<double>(backward_error(a, std::complex<long double>(r.real(), r.imag()))));
  mark_clusters(rs, opts.cluster_distance);
  check_residuals(rs, opts);
  return rs;
}

/// Throws NoConvergence if any residual exceeds its (cluster-aware) bound.
inline void check_residuals(ComplexRootSet& rs, const RootFinderOptions& opts) {
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    const double limit = rs.clustered[k] ? opts.cluster_residual_tolerance : opts.residual_tolerance;
    if (!(rs.residuals[k] <= limit)) {
      std::string message = "root " + std::to_string(k) + " has residual " + std::to_string(rs.residuals[k]) +
                            " after " + std::to_string(rs.iterations) + " iterations";
      throw NoConvergence(message, std::move(rs));
    }
  }
}

inline ComplexRootSet find_all_roots(const IntPoly& p, const RootFinderOptions& opts = {}) {
  return find_all_roots(std::span<const BigInt>(p.coeffs()), opts);
}

inline ComplexRootSet find_all_roots(const DominationPolynomial& p, const RootFinderOptions& opts = {}) {
  return find_all_roots(std::span<const BigInt>(p.coeffs()), opts);
}

/// Monic polynomial x^zero_multiplicity * prod (x - r), highest degree last.
inline std::vector<std::complex<long double>> reconstruct_monic(const ComplexRootSet& rs) {
  std::vector<std::complex<long double>> c{1.0L};
  const auto multiply = [&c](std::complex<long double> r) {
    c.push_back(0.0L);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  };
  for (std::size_t k = 0; k < rs.zero_multiplicity; ++k) multiply(0.0L);
  for (const auto& r : rs.roots) multiply(std::complex<long double>(r.real(), r.imag()));
  return c;
}

struct ConjugatePair {
  Complex upper;  // Im > 0
  Complex lower;
};

struct RootClassification {
  std::size_t zero_count = 0;
  std::vector<double> negative_real;
  std::vector<double> positive_real;
  std::vector<ConjugatePair> nonreal_pairs;
  /// Non-real roots with no conjugate partner; empty for well-converged input.
  std::vector<Complex> unpaired;
  bool has_positive_real_part = false;
  double max_real_part = -std::numeric_limits<double>::infinity();

  std::size_t total() const {
    return zero_count + negative_real.size() + positive_real.size() + 2 * nonreal_pairs.size() + unpaired.size();
  }
};

/// Partitions roots into zero, negative real, positive real and conjugate
/// pairs. A root with |Im| < tol is real; a real root with |Re| < tol is zero.
inline RootClassification classify(const ComplexRootSet& rs, double tol = 1e-9) {
  RootClassification out;
  out.zero_count = rs.zero_multiplicity;
  std::vector<Complex> upper, lower;
  for (const auto& r : rs.roots) {
    if (std::abs(r.imag()) < tol) {
      if (std::abs(r.real()) < tol)
        ++out.zero_count;
      else
        (r.real() < 0 ? out.negative_real : out.positive_real).push_back(r.real());
    } else {
      (r.imag() > 0 ? upper : lower).push_back(r);
    }
    if (std::abs(r) >= tol) {
      out.max_real_part = std::max(out.max_real_part, r.real());
      if (r.real() > tol) out.has_positive_real_part = true;
    }
  }
  std::sort(out.negative_real.begin(), out.negative_real.end());
  std::sort(out.positive_real.begin(), out.positive_real.end());
  const auto by_re_im = [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  };
  std::sort(upper.begin(), upper.end(), by_re_im);
  std::vector<bool> used(lower.size(), false);
  for (const auto& u : upper) {
    std::size_t best = lower.size();
    double best_dist = 0.0;
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(std::conj(u) - lower[j]);
      if (best == lower.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best < lower.size() && best_dist < std::max(tol, 1e-6) * (1.0 + std::abs(u))) {
      used[best] = true;
      out.nonreal_pairs.push_back({u, lower[best]});
    } else {
      out.unpaired.push_back(u);
    }
  }
  for (std::size_t j = 0; j < lower.size(); ++j)
    if (!used[j]) out.unpaired.push_back(lower[j]);
  return out;
}

inline void to_json(nlohmann::json& j, const ComplexRootSet& rs) {
  auto roots = nlohmann::json::array();
  for (std::size_t k = 0; k < rs.roots.size(); ++k)
    roots.push_back({{"re", rs.roots[k].real()},
                     {"im", rs.roots[k].imag()},
                     {"residual", rs.residuals.at(k)},
                     {"clustered", static_cast<bool>(rs.clustered.at(k))}});
  j = nlohmann::json{{"zero_multiplicity", rs.zero_multiplicity}, {"roots", std::move(roots)}};
}

inline void to_json(nlohmann::json& j, const RootClassification& c) {
  auto pairs = nlohmann::json::array();
  for (const auto& p : c.nonreal_pairs) pairs.push_back({{"re", p.upper.real()}, {"im", p.upper.imag()}});
  auto unpaired = nlohmann::json::array();
  for (const auto& u : c.unpaired) unpaired.push_back({{"re", u.real()}, {"im", u.imag()}});
  j = nlohmann::json{{"zero_count", c.zero_count},
                     {"negative_real", c.negative_real},
                     {"positive_real", c.positive_real},
                     {"nonreal_pairs", std::move(pairs)},
                     {"unpaired", std::move(unpaired)},
                     {"has_positive_real_part", c.has_positive_real_part}};
}

}  // namespace domroots

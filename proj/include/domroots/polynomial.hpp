#pragma once

// Exact integer polynomials and the domination polynomial value type.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "domroots/bigint.hpp"
#include "domroots/error.hpp"

namespace domroots {

/// Dense polynomial over the integers; coefficient i multiplies x^i.
/// Trailing (high-degree) zeros are always trimmed, so the zero polynomial
/// has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long long> coeffs) {
    for (auto v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly monomial(std::size_t power, BigInt scale = 1) {
    std::vector<BigInt> c(power + 1);
    c[power] = std::move(scale);
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator*=(const BigInt& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(out));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly pow(std::size_t e) const {
    IntPoly result{1};
    IntPoly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// this(inner(x)) by Horner's scheme.
  IntPoly compose(const IntPoly& inner) const {
    IntPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= inner;
      acc += IntPoly(std::vector<BigInt>{c_[i]});
    }
    return acc;
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
    return IntPoly(std::move(d));
  }

  /// Divides by x^k where k is the number of zero low-order coefficients.
  std::pair<IntPoly, std::size_t> strip_zero_roots() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return {IntPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end())), k};
  }

  /// gcd of the coefficients, nonnegative.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) {
      g = boost::multiprecision::gcd(g, v);
      if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
  }

  /// Exact value at a rational point.
  Rational evaluate(const Rational& q) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
    return acc;
  }

  /// Sign (-1, 0, 1) at num/den with den > 0, using only integer arithmetic.
  int sign_at(const BigInt& num, const BigInt& den) const {
    BigInt acc = 0;
    BigInt den_power = 1;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * num + c_[i] * den_power;
      den_power *= den;
    }
    return acc.sign();
  }

  std::string to_string(char var = 'x') const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      BigInt mag = boost::multiprecision::abs(c_[i]);
      out += out.empty() ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + ");
      if (mag != 1 || i == 0) out += mag.str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

inline IntPoly primitive_part(const IntPoly& a) {
  const BigInt c = a.content();
  if (c <= 1) return a;
  std::vector<BigInt> reduced = a.coeffs();
  for (auto& v : reduced) v /= c;
  return IntPoly(std::move(reduced));
}

/// Pseudo-division: s * a = q * b + r with s a positive integer and
/// deg r < deg b.
struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
};

inline PseudoDivision pseudo_divide(IntPoly a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::Invalid, "division by the zero polynomial");
  const BigInt& lead = b.leading();
  const BigInt scale = boost::multiprecision::abs(lead);
  const int lead_sign = lead.sign();
  const long db = b.degree();
  IntPoly q;
  while (!a.is_zero() && a.degree() >= db) {
    // |lead| * a - sign(lead) * top * x^shift * b cancels the leading term.
    const auto shift = static_cast<std::size_t>(a.degree() - db);
    const IntPoly term = IntPoly::monomial(shift, lead_sign * a.leading());
    a = a * scale - term * b;
    q = q * scale + term;
  }
  return {std::move(q), std::move(a)};
}

/// Primitive integer polynomial that is a positive multiple of rem(a, b).
inline IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  return primitive_part(pseudo_divide(a, b).remainder);
}

/// Primitive gcd with a positive leading coefficient.
inline IntPoly polynomial_gcd(IntPoly a, IntPoly b) {
  while (!b.is_zero()) {
    IntPoly r = signed_pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  a = primitive_part(a);
  return !a.is_zero() && a.leading() < 0 ? -a : a;
}

/// Primitive b-multiple of a / b; throws Invalid unless b divides a.
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  auto division = pseudo_divide(a, b);
  if (!division.remainder.is_zero()) throw Error(ErrorKind::Invalid, "inexact polynomial division");
  return primitive_part(division.quotient);
}

/// Positive multiple of p / gcd(p, p'): same distinct roots, all simple.
inline IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() < 1) return p;
  const IntPoly g = polynomial_gcd(p, p.derivative());
  if (g.degree() < 1) return primitive_part(p);
  return primitive_part(pseudo_divide(p, g).quotient);
}

/// Squarefree factorization p = c * prod f_i^i over the integers. Returns
/// (f_i, i) for every nonconstant f_i, each primitive with positive leading
/// coefficient.
inline std::vector<std::pair<IntPoly, std::size_t>> squarefree_factorization(const IntPoly& p) {
  std::vector<std::pair<IntPoly, std::size_t>> out;
  if (p.degree() < 1) return out;
  // g[i] = gcd(g[i-1], g[i-1]') carries every root with its multiplicity
  // reduced by i.
  std::vector<IntPoly> g{primitive_part(p)};
  while (g.back().degree() > 0) g.push_back(polynomial_gcd(g.back(), g.back().derivative()));
  // h[i] = g[i] / g[i+1]: roots of multiplicity > i, each once.
  std::vector<IntPoly> h;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) h.push_back(exact_quotient(g[i], g[i + 1]));
  h.push_back(IntPoly{1});
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    IntPoly f = exact_quotient(h[i], h[i + 1]);
    if (f.leading() < 0) f = -f;
    if (f.degree() >= 1) out.emplace_back(std::move(f), i + 1);
  }
  return out;
}

/// D(G, x): coeffs[i] is the number of dominating sets of size i in a graph
/// of order n = coeffs.size() - 1.
class DominationPolynomial {
 public:
  DominationPolynomial() = default;
  /// Unchecked; call check_invariants() on untrusted input.
  explicit DominationPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  IntPoly as_poly() const { return IntPoly(coeffs_); }

  friend bool operator==(const DominationPolynomial&, const DominationPolynomial&) = default;

  /// Throws Invalid unless the structural invariants of a domination
  /// polynomial hold: order >= 1, coeffs[0] = 0, coeffs[n] = 1, nonnegative
  /// entries, bounded by C(n, i), with support an interval ending at n.
  void check_invariants() const {
    const auto fail = [](const std::string& why) { throw Error(ErrorKind::Invalid, why); };
    if (coeffs_.size() < 2) fail("domination polynomial needs order >= 1");
    const std::size_t n = order();
    if (coeffs_[0] != 0) fail("constant coefficient must be 0");
    if (coeffs_[n] != 1) fail("leading coefficient must be 1");
    BigInt binom = 1;
    bool seen = false;
    for (std::size_t i = 0; i <= n; ++i) {
      if (coeffs_[i] < 0) fail("negative coefficient at index " + std::to_string(i));
      if (coeffs_[i] > binom) fail("coefficient " + std::to_string(i) + " exceeds C(n, i)");
      if (coeffs_[i] > 0) seen = true;
      else if (seen) fail("support has a gap at index " + std::to_string(i));
      binom = binom * static_cast<long long>(n - i) / static_cast<long long>(i + 1);
    }
  }

  std::string to_string() const { return as_poly().to_string(); }

 private:
  std::vector<BigInt> coeffs_;
};

/// gamma(G): least index with a nonzero coefficient.
inline std::size_t domination_number(const DominationPolynomial& p) {
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) return i;
  throw Error(ErrorKind::Invalid, "all-zero polynomial has no domination number");
}

/// Round-to-nearest conversion of an exact integer to double.
inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

/// Horner evaluation in double-precision complex arithmetic.
inline std::complex<double> evaluate_complex(const DominationPolynomial& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + to_double(c[i]);
  return acc;
}

inline Rational evaluate_exact(const DominationPolynomial& p, const Rational& q) {
  return p.as_poly().evaluate(q);
}

inline void to_json(nlohmann::json& j, const DominationPolynomial& p) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  j = nlohmann::json{{"n", p.order()}, {"coeffs", std::move(coeffs)}};
}

/// Reads {"n": int, "coeffs": [decimal strings]} and validates invariants.
inline void from_json(const nlohmann::json& j, DominationPolynomial& p) {
  const auto n = j.at("n").get<std::size_t>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || arr.size() != n + 1)
    throw Error(ErrorKind::Invalid, "coeffs must be an array of n + 1 decimal strings");
  std::vector<BigInt> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& item : arr) {
    const auto text = item.get<std::string>();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::Invalid, "coefficient '" + text + "' is not a nonnegative decimal");
    coeffs.emplace_back(text);
  }
  p = DominationPolynomial(std::move(coeffs));
  p.check_invariants();
}

}  // namespace domroots

#pragma once

// Exact real-root counting with Sturm sequences. The remainder sequence is
// computed over the integers: each step takes a sign-preserving pseudo-
// remainder and divides out its content, so every entry stays a positive
// multiple of the corresponding rational Sturm polynomial.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "domroots/bigint.hpp"
#include "domroots/error.hpp"
#include "domroots/polynomial.hpp"

namespace domroots {

/// Interval endpoint: a rational or one of the two infinities.
class Bound {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  static Bound neg_inf() { return Bound(Kind::NegInf, 0); }
  static Bound pos_inf() { return Bound(Kind::PosInf, 0); }
  static Bound at(Rational q) { return Bound(Kind::Finite, std::move(q)); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  const Rational& value() const { return value_; }

  std::string str() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "+inf";
      case Kind::Finite: return value_.str();
    }
    return {};
  }

  friend bool operator<(const Bound& a, const Bound& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == Kind::Finite && a.value_ < b.value_;
  }

 private:
  Bound(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}

  Kind kind_;
  Rational value_;
};

/// Exact number of distinct real roots in (lower, upper].
struct RealRootCertificate {
  Bound lower = Bound::neg_inf();
  Bound upper = Bound::pos_inf();
  std::size_t count = 0;
};

/// Sturm chain p, p', -rem(p, p'), ... of the squarefree part of p.
inline std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::Invalid, "Sturm sequence of the zero polynomial");
  std::vector<IntPoly> seq{squarefree_part(p)};
  IntPoly next = primitive_part(seq.front().derivative());
  while (!next.is_zero()) {
    seq.push_back(next);
    next = -signed_pseudo_remainder(seq[seq.size() - 2], seq.back());
  }
  return seq;
}

/// Sign changes of the sequence at a point, zeros skipped.
inline std::size_t sign_variations(const std::vector<IntPoly>& seq, const Bound& at) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = 0;
    switch (at.kind()) {
      case Bound::Kind::PosInf: s = q.leading().sign(); break;
      case Bound::Kind::NegInf: s = q.leading().sign() * (q.degree() % 2 == 0 ? 1 : -1); break;
      case Bound::Kind::Finite:
        s = q.sign_at(boost::multiprecision::numerator(at.value()), boost::multiprecision::denominator(at.value()));
        break;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Distinct real roots of p in (lower, upper].
inline RealRootCertificate count_distinct_real_roots(const IntPoly& p, const Bound& lower, const Bound& upper) {
  if (!(lower < upper)) throw Error(ErrorKind::Invalid, "interval needs lower < upper");
  if (lower.kind() == Bound::Kind::PosInf || upper.kind() == Bound::Kind::NegInf)
    throw Error(ErrorKind::Invalid, "interval endpoints out of order");
  const auto seq = sturm_sequence(p);
  const auto vl = sign_variations(seq, lower);
  const auto vu = sign_variations(seq, upper);
  return {lower, upper, vl - vu};
}

/// Distinct nonzero real roots of D(G, x) in (lower, upper]. The root at zero
/// (multiplicity gamma(G)) is divided out first.
inline RealRootCertificate sturm_real_root_count(const DominationPolynomial& p, const Bound& lower,
                                                 const Bound& upper) {
  const auto [deflated, zeros] = p.as_poly().strip_zero_roots();
  (void)zeros;
  return count_distinct_real_roots(deflated, lower, upper);
}

/// True iff D(G, x) has no real root other than 0. Negative roots are ruled
/// out by a Sturm count on (-inf, 0]. With nonnegative coefficients p > 0 on
/// the positive axis; otherwise (0, +inf) is counted too.
inline bool certify_no_nonzero_real_roots(const DominationPolynomial& p) {
  const auto& c = p.coeffs();
  bool any_positive = false;
  bool any_negative = false;
  for (const auto& v : c) {
    any_positive = any_positive || v > 0;
    any_negative = any_negative || v < 0;
  }
  if (!any_positive && !any_negative) throw Error(ErrorKind::Invalid, "zero polynomial");
  if (sturm_real_root_count(p, Bound::neg_inf(), Bound::at(0)).count != 0) return false;
  return !any_negative || sturm_real_root_count(p, Bound::at(0), Bound::pos_inf()).count == 0;
}

inline void to_json(nlohmann::json& j, const RealRootCertificate& cert) {
  j = nlohmann::json{{"lower", cert.lower.str()}, {"upper", cert.upper.str()}, {"count", cert.count}};
}

}  // namespace domroots

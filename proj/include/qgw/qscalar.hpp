#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace qgw {

using Rat = mpq_class;

/// Laurent terms: exponent of q -> nonzero rational coefficient.
using Terms = std::map<int, Rat>;

/// Exact coefficient ring of the whole workbench: Laurent polynomials in the
/// deformation parameter q over the rationals. Division is supported by
/// falling back to a reduced numerator/denominator pair, so QScalar is in
/// fact closed under the field operations; polynomial values keep
/// denominator 1 and satisfy the canonical-terms invariant (no zero
/// coefficients, equality = identical term maps).
class QScalar {
 public:
  QScalar() = default;
  QScalar(long c);
  QScalar(int c);
  explicit QScalar(const Rat& c);

  /// c * q^k
  static QScalar q_power(int k, const Rat& c = Rat(1));
  static QScalar from_terms(Terms t);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  bool is_polynomial() const;

  /// Term map; only meaningful for polynomial values (throws otherwise).
  const Terms& terms() const;
  const Terms& numerator() const { return num_; }
  const Terms& denominator() const { return den_; }

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

  bool operator==(const QScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QScalar& o) const { return !(*this == o); }

  /// Exact substitution q = q0, q0 nonzero (and not a pole).
  Rat evaluate_at(const Rat& q0) const;
  /// d/dq at q = 1.
  Rat derivative_at_one() const;
  Rat at_one() const;

  QScalar pow(int k) const;

  /// Monic gcd in Q[q] of two polynomial values, q-power parts ignored.
  QScalar poly_gcd(const QScalar& o) const;

  /// Total number of stored terms (numerator + denominator if nontrivial).
  int term_count() const;

  /// Canonical string, ascending exponents: "c" | "c*q^k" joined by " + ".
  std::string str() const;

 private:
  Terms num_;                  // empty == zero
  Terms den_{{0, Rat(1)}};     // normalized: primitive integer, min exp 0
  void normalize();
};

}  // namespace qgw

#include "qgw/qscalar.hpp"

#include <sstream>

namespace qgw {
namespace {

using P = Terms;

bool p_is_zero(const P& a) { return a.empty(); }

bool p_is_one(const P& a) {
  return a.size() == 1 && a.begin()->first == 0 && a.begin()->second == 1;
}

void p_add_term(P& a, int e, const Rat& c) {
  if (c == 0) return;
  auto it = a.find(e);
  if (it == a.end()) {
    a.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

P p_add(const P& a, const P& b) {
  P r = a;
  for (auto& [e, c] : b) p_add_term(r, e, c);
  return r;
}

P p_neg(const P& a) {
  P r;
  for (auto& [e, c] : a) r.emplace(e, -c);
  return r;
}

P p_mul(const P& a, const P& b) {
  P r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) p_add_term(r, ea + eb, ca * cb);
  return r;
}

P p_shift(const P& a, int k) {
  P r;
  for (auto& [e, c] : a) r.emplace(e + k, c);
  return r;
}

int p_min_exp(const P& a) { return a.begin()->first; }
int p_max_exp(const P& a) { return a.rbegin()->first; }

// Remainder of a by b in Q[q]; both must have min exponent >= 0, b nonzero.
P p_rem(P a, const P& b) {
  int db = p_max_exp(b);
  const Rat& lb = b.rbegin()->second;
  while (!a.empty() && p_max_exp(a) >= db) {
    int sh = p_max_exp(a) - db;
    Rat f = a.rbegin()->second / lb;
    for (auto& [e, c] : b) p_add_term(a, e + sh, -f * c);
  }
  return a;
}

// Exact division a / b in Q[q] (throws if not exact).
P p_divexact(P a, const P& b) {
  P qout;
  int db = p_max_exp(b);
  const Rat& lb = b.rbegin()->second;
  while (!a.empty()) {
    if (p_max_exp(a) < db) throw std::runtime_error("inexact poly division");
    int sh = p_max_exp(a) - db;
    Rat f = a.rbegin()->second / lb;
    qout.emplace(sh, f);
    for (auto& [e, c] : b) p_add_term(a, e + sh, -f * c);
  }
  return qout;
}

// gcd in Q[q] of the non-q-power parts; inputs shifted to min exponent 0.
P p_gcd(P a, P b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  a = p_shift(a, -p_min_exp(a));
  b = p_shift(b, -p_min_exp(b));
  while (!b.empty()) {
    P r = p_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) b = p_shift(b, -p_min_exp(b));
  }
  // make monic
  Rat l = a.rbegin()->second;
  for (auto& [e, c] : a) c /= l;
  return a;
}

Rat p_eval(const P& a, const Rat& q0) {
  // exponents may be negative; q0 != 0 checked by caller
  Rat r = 0;
  for (auto& [e, c] : a) {
    Rat pw = 1;
    mpz_class num = q0.get_num(), den = q0.get_den();
    int k = e >= 0 ? e : -e;
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
    if (e >= 0)
      pw = Rat(pn) / Rat(pd);
    else
      pw = Rat(pd) / Rat(pn);
    r += c * pw;
  }
  return r;
}

Rat p_eval1(const P& a) {
  Rat r = 0;
  for (auto& [e, c] : a) r += c;
  return r;
}

Rat p_deriv1(const P& a) {
  Rat r = 0;
  for (auto& [e, c] : a) r += Rat(e) * c;
  return r;
}

}  // namespace

QScalar::QScalar(long c) {
  if (c != 0) num_.emplace(0, Rat(c));
}
QScalar::QScalar(int c) : QScalar(long(c)) {}
QScalar::QScalar(const Rat& c) {
  if (c != 0) num_.emplace(0, c);
}

QScalar QScalar::q_power(int k, const Rat& c) {
  QScalar r;
  if (c != 0) r.num_.emplace(k, c);
  return r;
}

QScalar QScalar::from_terms(Terms t) {
  QScalar r;
  for (auto& [e, c] : t)
    if (c != 0) r.num_.emplace(e, c);
  return r;
}

QScalar QScalar::poly_gcd(const QScalar& o) const {
  return from_terms(p_gcd(terms(), o.terms()));
}

bool QScalar::is_one() const {
  return p_is_one(num_) && p_is_one(den_);
}

bool QScalar::is_polynomial() const { return p_is_one(den_); }

const Terms& QScalar::terms() const {
  if (!is_polynomial()) throw std::runtime_error("QScalar: non-polynomial value");
  return num_;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = p_neg(r.num_);
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (den_ == o.den_) {
    num_ = p_add(num_, o.num_);
  } else {
    num_ = p_add(p_mul(num_, o.den_), p_mul(o.num_, den_));
    den_ = p_mul(den_, o.den_);
  }
  normalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
  *this += -o;
  return *this;
}

QScalar& QScalar::operator*=(const QScalar& o) {
  num_ = p_mul(num_, o.num_);
  den_ = p_mul(den_, o.den_);
  normalize();
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) {
  if (o.is_zero()) throw std::runtime_error("QScalar: division by zero");
  num_ = p_mul(num_, o.den_);
  den_ = p_mul(den_, o.num_);
  normalize();
  return *this;
}

void QScalar::normalize() {
  if (num_.empty()) {
    den_ = P{{0, Rat(1)}};
    return;
  }
  if (!p_is_one(den_)) {
    // deal with q-power factors first
    int s = p_min_exp(den_);
    if (s != 0) {
      den_ = p_shift(den_, -s);
      num_ = p_shift(num_, -s);
    }
    if (den_.size() > 1 || num_.size() > 1) {
      P g = p_gcd(num_, den_);
      if (!p_is_one(g)) {
        int sn = p_min_exp(num_);
        num_ = p_shift(p_divexact(p_shift(num_, -sn), g), sn);
        den_ = p_divexact(den_, g);
      }
    }
  }
  // scale so the denominator is a primitive integer polynomial with a
  // positive leading coefficient
  mpz_class g = 0, l = 1;
  for (auto& [e, c] : den_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content = Rat(g) / Rat(l);
  if (den_.rbegin()->second < 0) content = -content;
  if (content != 1) {
    for (auto& [e, c] : den_) c /= content;
    for (auto& [e, c] : num_) c /= content;
  }
}

Rat QScalar::evaluate_at(const Rat& q0) const {
  if (q0 == 0) throw std::runtime_error("QScalar: evaluation at q = 0");
  Rat d = p_eval(den_, q0);
  if (d == 0) throw std::runtime_error("QScalar: evaluation at a pole");
  return p_eval(num_, q0) / d;
}

Rat QScalar::at_one() const {
  Rat d = p_eval1(den_);
  if (d == 0) throw std::runtime_error("QScalar: pole at q = 1");
  return p_eval1(num_) / d;
}

Rat QScalar::derivative_at_one() const {
  Rat d = p_eval1(den_);
  if (d == 0) throw std::runtime_error("QScalar: pole at q = 1");
  Rat n = p_eval1(num_);
  return (p_deriv1(num_) * d - n * p_deriv1(den_)) / (d * d);
}

QScalar QScalar::pow(int k) const {
  if (k < 0) return (QScalar(1) / *this).pow(-k);
  QScalar r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

int QScalar::term_count() const {
  int n = int(num_.size());
  if (!p_is_one(den_)) n += int(den_.size());
  return n;
}

namespace {
std::string poly_str(const P& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : p) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c.get_str();
    } else {
      os << c.get_str() << "*q^" << e;
    }
  }
  return os.str();
}
}  // namespace

std::string QScalar::str() const {
  if (is_polynomial()) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

}  // namespace qgw

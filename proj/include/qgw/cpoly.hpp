#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgw/qscalar.hpp"

namespace qgw {

/// Exponent vector over a fixed variable count (matrix coordinates x^i_j
/// flattened row-major; index i*N + j).
using Mono = std::vector<int>;

/// Commutative polynomial with exact rational coefficients. Kept separate
/// from the noncommutative side on purpose: the classical bracket tables are
/// genuinely commutative and ordering bugs must not be representable.
struct CPoly {
  int nvars = 0;
  std::map<Mono, Rat> t;  // monomial -> nonzero coefficient

  explicit CPoly(int nvars = 0) : nvars(nvars) {}

  static CPoly constant(int nvars, const Rat& c);
  static CPoly variable(int nvars, int v);

  bool is_zero() const { return t.empty(); }
  int degree() const;  // -1 for the zero polynomial

  void add_term(const Mono& m, const Rat& c);

  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly scaled(const Rat& c) const;
  bool operator==(const CPoly& o) const { return nvars == o.nvars && t == o.t; }

  CPoly derivative(int v) const;
  Rat evaluate(const std::vector<Rat>& point) const;

  std::string str(int N) const;  // variables printed as x^i_j
};

}  // namespace qgw

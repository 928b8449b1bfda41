#pragma once

#include <vector>

#include "qgw/cpoly.hpp"
#include "qgw/qfun.hpp"
#include "qgw/rmat.hpp"

namespace qgw {

enum class BracketKind { DS, STS };

/// Quadratic Poisson bracket table on the N*N matrix coordinate functions.
/// Entry (a, b) with a = i*N + j, b = k*N + l is {x^i_j, x^k_l}.
struct PoissonSpec {
  BracketKind kind = BracketKind::DS;
  SeriesId id{};
  int N = 0;
  std::vector<CPoly> table;  // (N*N)^2 entries, row-major over (a, b)

  const CPoly& entry(int a, int b) const { return table[size_t(a) * N * N + b]; }
};

/// Drinfeld-Sklyanin table, assembled termwise from the left/left minus
/// right/right action of the classical r-matrix on coordinates.
PoissonSpec ds_bracket_table(const RMatrixData& rd);

/// Independent assembly of the same table from the closed matrix commutator
/// form {X1, X2} = [X1 X2, r]; used as a two-route oracle.
std::vector<CPoly> ds_bracket_closed_form(const RMatrixData& rd);

/// Semenov-Tian-Shansky table, assembled termwise from the eight adjoint
/// contributions of the skew part plus the mixed symmetric-part terms.
PoissonSpec sts_bracket_table(const RMatrixData& rd);

/// Independent assembly via the closed sandwich form
/// X1 X2 r- + r- X1 X2 - X1 r- X2 - X2 r- X1 + X2 Om X1 - X1 Om X2.
std::vector<CPoly> sts_bracket_closed_form(const RMatrixData& rd);

/// Bracket on arbitrary polynomials by the Leibniz extension of the table.
CPoly poisson_bracket(const PoissonSpec& spec, const CPoly& f, const CPoly& g);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
CPoly jacobiator(const PoissonSpec& spec, const CPoly& f, const CPoly& g, const CPoly& h);

/// Exact rational points of the classical quadric B0 X^t B0^{-1} X = f^2 I,
/// produced by Cayley transforms of metric-antisymmetric rational matrices,
/// scaled by a nonzero rational f. Each point is verified before returning.
std::vector<std::vector<Rat>> cayley_points(const RMatrixData& rd, int count, unsigned seed);

struct VarietyReport {
  bool symbolic = false;        // series A: identical vanishing on all triples
  int points_checked = 0;       // B/C/D: exact variety points sampled
  bool on_variety = false;      // all sampled jacobiators vanish
  bool off_variety_nonzero = false;  // negative control for B/C/D
  bool pass = false;
};

/// Jacobi identity of the bracket on its natural domain: symbolically for
/// series A, at exact variety points (with an off-variety nonvanishing
/// control) for B/C/D.
VarietyReport jacobi_check_on_variety(const PoissonSpec& spec, const RMatrixData& rd,
                                      int num_points, unsigned seed);

struct SemiclassicalReport {
  bool c_found = false;
  Rat c = 0;        // single constant reconciling all generator pairs
  int pairs_checked = 0;
  bool pass = false;
};

/// First-order comparison: derivative at q = 1 of every normal-formed
/// generator commutator must equal c times the bracket-table entry, with one
/// constant c across all ordered pairs. pres must be a free-model
/// presentation over the same series (FRT pairs with DS, RE with STS).
SemiclassicalReport semiclassical_compare(const AlgebraPresentation& pres,
                                          const PoissonSpec& spec);

}  // namespace qgw

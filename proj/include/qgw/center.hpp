#pragma once

#include <vector>

#include "qgw/freenc.hpp"
#include "qgw/qfun.hpp"
#include "qgw/rmat.hpp"
#include "qgw/twist.hpp"

namespace qgw {

/// Degreewise dimensions of the conjugation invariants of polynomial
/// functions on N x N matrices, computed by two independent routes that must
/// agree: kernel of the infinitesimal adjoint derivations, and fixed space of
/// conjugation by sampled rational group points.
struct InvariantDims {
  std::vector<int> dims;       // degrees 0..d_max
  bool routes_agree = false;
};
InvariantDims classical_invariant_dims(int N, int d_max);

struct CenterReport {
  std::vector<int> quantum_dims;    // degrees 0..d_max
  std::vector<int> classical_dims;  // conjugation-invariant oracle
  std::vector<bool> match;
  bool routes_agree = false;        // the two classical routes coincide
  bool bases_commute = false;       // centralizer elements pairwise commute
  bool pass = false;                // matches + commuting bases + route agreement
};

/// Quantum center dimensions against the classical conjugation-invariant
/// oracle. gq must reach degree d_max + 1 (centralizer computations look one
/// degree up). The dimension comparison is the meaningful test for the
/// reflection-equation side; the same report run on an FRT quotient exhibits
/// the expected mismatch starting at degree 1.
CenterReport center_report(const GradedQuotient& gq, int d_max);

/// The degree-1 central element of a reflection-equation quotient, normalized
/// so its q = 1 specialization is the ordinary trace. The diagonal weighting
/// is read off the centralizer solver, never transcribed. Throws if the
/// degree-1 centralizer is not one-dimensional or fails the normalization.
NCPoly quantum_trace(const GradedQuotient& gq);

struct FreenessReport {
  std::vector<int> algebra_dims;     // dim A_d
  std::vector<int> center_dims;      // dim I_d (span of center-generator monomials)
  std::vector<int> complement_dims;  // dim E_d for the chosen complement
  std::vector<bool> bijective;       // multiplication map (+) I_i (x) E_j -> A_d
  bool generators_central = false;   // every generator commutes with the letters
  bool pass = false;
};

/// Degreewise freeness of a graded quotient over the subalgebra generated by
/// the given homogeneous central elements: E is chosen as the lexicographic
/// complement of I_{>0}·E inside each degree, and the multiplication map is
/// required to be bijective (column count equal to rank equal to dim A_d).
FreenessReport freeness_report(const GradedQuotient& gq,
                               const std::vector<NCPoly>& center_gens, int d_max);

/// Transport containment of centers: every degree-d FRT centralizer element,
/// pushed through the generator cocycle and normal-formed on the RE side,
/// must land in the span of the RE centralizer. Checked for 1 <= d <= d_max.
bool transported_center_contained(const RMatrixData& rd, int d_max);

}  // namespace qgw

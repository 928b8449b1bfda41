#pragma once

#include <string>

#include "qgw/linalg.hpp"

namespace qgw {

enum class Series { A, B, C, D };

Series series_from_string(const std::string& s);
std::string series_name(Series s);

struct SeriesId {
  Series series;
  int rank;
  int N;  // A: rank+1, B: 2*rank+1, C/D: 2*rank
};

SeriesId make_series(Series s, int rank);

/// R-matrix of the basic representation plus derived classical parts.
/// Constructed by build_R, which verifies all structural invariants
/// (QYBE, classical limit, cYBE of the derived r) and throws on failure.
struct RMatrixData {
  SeriesId id;
  QMatrix R;            // N² x N²
  QMatrix R_inv;
  QMatrix B_form;       // N x N, series B/C/D only (rows()==0 for A)
  QMatrix r_classical;  // (1/2) dR/dq at q=1
  QMatrix r_minus;      // skew part under leg flip
  QMatrix omega_rep;    // symmetric part under leg flip

  int N() const { return id.N; }
};

RMatrixData build_R(SeriesId id);

/// R12 R13 R23 == R23 R13 R12 as N³ x N³ matrices, exactly.
bool check_qybe(const QMatrix& R);

/// [r12,r13] + [r12,r23] + [r13,r23] == 0, exactly.
bool check_cybe(const QMatrix& r);

/// Metric form of the orthogonal/symplectic series, solved from the
/// one-dimensional distinguished eigenspace of flip∘R and normalized so the
/// q=1 limit is the classical antidiagonal form. Throws for series A.
QMatrix build_B(SeriesId id);
QMatrix classical_B0(SeriesId id);

/// Leg-exchange permutation on V⊗V.
QMatrix flip_matrix(int N);

/// Embeddings End(V⊗V) -> End(V⊗V⊗V) on legs (1,2), (1,3), (2,3).
QMatrix leg12(const QMatrix& M, int N);
QMatrix leg13(const QMatrix& M, int N);
QMatrix leg23(const QMatrix& M, int N);

}  // namespace qgw

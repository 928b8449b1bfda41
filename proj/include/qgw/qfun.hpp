#pragma once

#include "qgw/freenc.hpp"
#include "qgw/rmat.hpp"

namespace qgw {

enum class AlgKind { FRT, RE, CLASSICAL };
enum class GroupModel { Free, Sharp };

AlgKind kind_from_string(const std::string& s);
std::string kind_name(AlgKind k);

/// Square matrix over noncommutative polynomials; entry products concatenate
/// left factor before right factor.
struct NCMatrix {
  int n = 0;
  std::vector<NCPoly> e;

  NCMatrix() = default;
  explicit NCMatrix(int n_) : n(n_), e(size_t(n_) * n_) {}
  NCPoly& at(int i, int j) { return e[size_t(i) * n + j]; }
  const NCPoly& at(int i, int j) const { return e[size_t(i) * n + j]; }

  /// Matrix of generators T^i_j (or its transpose).
  static NCMatrix generators(const Alphabet& a, bool transposed = false);
  static NCMatrix constant(const QMatrix& m);

  NCMatrix mul(const NCMatrix& o, const Alphabet& a) const;
  NCMatrix operator-(const NCMatrix& o) const;
};

/// Quadratic generator relations: the N^4 entries of R T1 T2 - T2 T1 R.
std::vector<NCPoly> frt_relation_polys(const RMatrixData& rd, const Alphabet& a);
/// The N^4 entries of R21 K1 R12 K2 - K2 R21 K1 R12.
std::vector<NCPoly> re_relation_polys(const RMatrixData& rd, const Alphabet& a);

RelationSet frt_relations(const RMatrixData& rd, bool with_f = false);
RelationSet re_relations(const RMatrixData& rd, bool with_f = false);

struct AlgebraPresentation {
  AlgKind kind = AlgKind::FRT;
  GroupModel model = GroupModel::Free;
  SeriesId id{};
  Alphabet alphabet{};
  RelationSet relations{};
};

/// Degree-N central element of the free-matrix quotient whose q = 1 limit is
/// the classical determinant; solved from those two constraints, with the
/// classical normalization (identity-permutation coefficient 1). Throws when
/// the constraints have no solution.
NCPoly quantum_determinant(const RMatrixData& rd, AlgKind kind);

/// Additional homogeneous relations of the sharp (central-extension) model:
/// series A gets det_q - f^N; the metric series get the 2 N^2 entries of
/// B T^t B^{-1} T - f^2 and T B T^t B^{-1} - f^2 (FRT side) or their
/// twisted counterparts assembled from R-sandwiched matrix products (RE side).
std::vector<NCPoly> sharp_relation_polys(const RMatrixData& rd, AlgKind kind);

/// RE-side metric relations in the printed twisted-matrix-equation form.
std::vector<NCPoly> re_metric_relation_polys(const RMatrixData& rd, const Alphabet& a);

AlgebraPresentation build_presentation(const RMatrixData& rd, AlgKind kind, GroupModel model);

/// Same generators and specialized relations at q = 1, plus all commutators:
/// the commutative oracle for flatness comparisons.
AlgebraPresentation classical_of(const AlgebraPresentation& p);

struct FlatnessReport {
  std::vector<int> quantum_dims;
  std::vector<int> classical_dims;
  bool pass = false;
};
FlatnessReport flatness_check(const AlgebraPresentation& p, int d_max);

/// Filtration-level dimensions of the f = 1 quotient of a sharp model,
/// computed from truncated ideal placements of the dehomogenized relations.
std::vector<int> unitf_filtered_dims(const AlgebraPresentation& sharp, int d_max);

/// Commutative shadow of an NC polynomial at q = 1: letters of each word
/// sorted, coefficients specialized. Used by solvers and oracles.
std::map<Word, Rat> commutative_image_at_one(const NCPoly& p);

}  // namespace qgw

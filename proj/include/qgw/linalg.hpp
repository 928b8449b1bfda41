#pragma once

#include <utility>
#include <vector>

#include "qgw/qscalar.hpp"

namespace qgw {

/// Dense rectangular matrix of QScalars.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  QScalar& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const QScalar& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const QScalar& s) const;
  bool operator==(const QMatrix& o) const;
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  QMatrix transpose() const;
  /// Kronecker product (this in the first leg).
  QMatrix kron(const QMatrix& o) const;
  /// Entrywise evaluation at q = q0 (result has constant entries).
  QMatrix evaluate_at(const Rat& q0) const;
  /// Entrywise d/dq at q = 1.
  QMatrix derivative_at_one() const;

  QMatrix inverse() const;  // throws if singular

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<QScalar> e_;
};

/// Sparse row: sorted (column, coefficient) pairs; coefficients normally
/// polynomial (cleared denominators).
struct SparseRow {
  std::vector<std::pair<int, QScalar>> e;

  bool empty() const { return e.empty(); }
  int lead() const { return e.front().first; }
  int term_count() const;
  void clear_denominators();
  /// Divide by the common polynomial factor, rational content and q-power.
  void normalize_content();
};

/// Outcome of a reduced-row-echelon computation over the fraction field,
/// rows returned with cleared denominators.
struct RrefResult {
  int cols = 0;
  std::vector<int> pivot_cols;      // strictly ascending
  std::vector<SparseRow> rows;      // rows[i] has leading column pivot_cols[i]

  int rank() const { return int(pivot_cols.size()); }
  std::vector<int> complement_cols() const;
  /// Reduce a row against the pivot rows; result has no support on pivots.
  SparseRow reduce(SparseRow r) const;
  bool contains(SparseRow r) const;
};

/// Fraction-free elimination with pivot-row selection by minimal term count,
/// back-substituted to reduced form, content-normalized.
RrefResult sparse_rref(std::vector<SparseRow> rows, int cols);

/// Right-kernel basis vectors (as sparse rows over the column index space),
/// one per non-pivot column, denominators cleared.
std::vector<SparseRow> kernel_basis(const RrefResult& r);

bool same_span(const RrefResult& a, const RrefResult& b);

/// Per-spec exact rref of a dense matrix.
struct DenseRref {
  int rank = 0;
  std::vector<int> pivot_columns;
  QMatrix row_basis;     // rank x cols
  QMatrix kernel_basis;  // cols x (cols - rank), columns span the right kernel
};
DenseRref rref(const QMatrix& m);

}  // namespace qgw

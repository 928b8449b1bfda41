#include "qgw/linalg.hpp"

#include <algorithm>
#include <map>

namespace qgw {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = QScalar(1);
  return m;
}

bool QMatrix::is_zero() const {
  for (auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool QMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("QMatrix: shape mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("QMatrix: shape mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::runtime_error("QMatrix: shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const QScalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const QScalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

QMatrix QMatrix::operator*(const QScalar& s) const {
  QMatrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QMatrix QMatrix::kron(const QMatrix& o) const {
  QMatrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l)
          if (!o.at(k, l).is_zero())
            r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

QMatrix QMatrix::evaluate_at(const Rat& q0) const {
  QMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = QScalar(at(i, j).evaluate_at(q0));
  return r;
}

QMatrix QMatrix::derivative_at_one() const {
  QMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = QScalar(at(i, j).derivative_at_one());
  return r;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::runtime_error("QMatrix: inverse of non-square");
  int n = rows_;
  // Gauss-Jordan over the fraction field
  QMatrix a = *this, inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        if (p < 0 || a.at(r, col).term_count() < a.at(p, col).term_count()) p = r;
      }
    if (p < 0) throw std::runtime_error("QMatrix: singular");
    if (p != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(col, j));
        std::swap(inv.at(p, j), inv.at(col, j));
      }
    QScalar piv = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= piv;
      inv.at(col, j) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      QScalar f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        if (!a.at(col, j).is_zero()) a.at(r, j) -= f * a.at(col, j);
        if (!inv.at(col, j).is_zero()) inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

int SparseRow::term_count() const {
  int n = 0;
  for (auto& [c, v] : e) n += v.term_count();
  return n;
}

void SparseRow::clear_denominators() {
  QScalar l(1);
  bool any = false;
  for (auto& [c, v] : e)
    if (!v.is_polynomial()) {
      l *= QScalar::from_terms(v.denominator());
      any = true;
    }
  if (!any) return;
  for (auto& [c, v] : e) v *= l;
  normalize_content();
}

void SparseRow::normalize_content() {
  if (e.empty()) return;
  // common polynomial factor first (a row with every entry divisible by,
  // say, q^2 - 1 would otherwise present a spurious zero at q = 1)
  QScalar pg = e.front().second;
  for (size_t i = 1; i < e.size() && pg.terms().size() > 1; ++i) pg = pg.poly_gcd(e[i].second);
  if (pg.terms().size() > 1)
    for (auto& [c, v] : e) v /= pg;
  // rational content and common q-power
  mpz_class g = 0, l = 1;
  int minexp = INT32_MAX;
  for (auto& [c, v] : e) {
    for (auto& [exp, coef] : v.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coef.get_num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coef.get_den().get_mpz_t());
      minexp = std::min(minexp, exp);
    }
  }
  Rat content = Rat(g) / Rat(l);
  if (e.front().second.terms().rbegin()->second < 0) content = -content;
  QScalar f = QScalar::q_power(-minexp, Rat(1) / content);
  if (!f.is_one())
    for (auto& [c, v] : e) v *= f;
}

namespace {

// r := pr * r - cr * p  (p's leading entry is at column `col` with value pv;
// cr is r's value at col). Both rows sorted; result sorted, col eliminated.
SparseRow combine(const SparseRow& r, const QScalar& cr, const SparseRow& p,
                  const QScalar& pv, int col) {
  SparseRow out;
  out.e.reserve(r.e.size() + p.e.size());
  size_t i = 0, j = 0;
  while (i < r.e.size() || j < p.e.size()) {
    int ci = i < r.e.size() ? r.e[i].first : INT32_MAX;
    int cj = j < p.e.size() ? p.e[j].first : INT32_MAX;
    if (ci < cj) {
      out.e.emplace_back(ci, pv * r.e[i].second);
      ++i;
    } else if (cj < ci) {
      out.e.emplace_back(cj, -(cr * p.e[j].second));
      ++j;
    } else {
      QScalar v = pv * r.e[i].second - cr * p.e[j].second;
      if (!v.is_zero()) out.e.emplace_back(ci, std::move(v));
      ++i;
      ++j;
    }
  }
  // drop the eliminated column if a zero slipped through exact cancellation
  out.e.erase(std::remove_if(out.e.begin(), out.e.end(),
                             [col](auto& p2) { return p2.first == col && p2.second.is_zero(); }),
              out.e.end());
  return out;
}

}  // namespace

std::vector<int> RrefResult::complement_cols() const {
  std::vector<int> r;
  size_t k = 0;
  for (int c = 0; c < cols; ++c) {
    if (k < pivot_cols.size() && pivot_cols[k] == c) {
      ++k;
    } else {
      r.push_back(c);
    }
  }
  return r;
}

SparseRow RrefResult::reduce(SparseRow r) const {
  for (size_t i = 0; i < pivot_cols.size() && !r.empty(); ++i) {
    int col = pivot_cols[i];
    auto it = std::lower_bound(r.e.begin(), r.e.end(), col,
                               [](auto& p, int c) { return p.first < c; });
    if (it == r.e.end() || it->first != col) continue;
    QScalar cr = it->second;
    r = combine(r, cr, rows[i], rows[i].e.front().second, col);
  }
  if (!r.empty()) {
    r.clear_denominators();
    r.normalize_content();
  }
  return r;
}

bool RrefResult::contains(SparseRow r) const { return reduce(std::move(r)).empty(); }

RrefResult sparse_rref(std::vector<SparseRow> input, int cols) {
  RrefResult res;
  res.cols = cols;
  for (auto& r : input) r.clear_denominators();

  // (pivot col -> index into pending pivot list)
  std::vector<std::pair<int, SparseRow>> pivots;  // unsorted by col yet
  std::map<int, size_t> by_col;

  // Eliminate over the fraction field with monic pivot rows: coefficients
  // stay gcd-reduced at their true size, where fraction-free scaling was
  // observed to pile up polynomial content at the larger degrees. The
  // cleared-denominator contract is restored on the way out.
  // Process rows simplest-first (term counts are fixed while rows wait).
  std::vector<SparseRow> todo = std::move(input);
  std::stable_sort(todo.begin(), todo.end(), [](const SparseRow& x, const SparseRow& y) {
    return x.term_count() < y.term_count();
  });
  for (auto& pending : todo) {
    SparseRow r = std::move(pending);
    if (r.empty()) continue;
    for (size_t i = 0; i < r.e.size();) {
      auto it = by_col.find(r.e[i].first);
      if (it == by_col.end()) {
        ++i;
        continue;
      }
      auto& p = pivots[it->second].second;
      r = combine(r, r.e[i].second, p, p.e.front().second, p.e.front().first);
      i = 0;  // restart scan; combine may shuffle entries
    }
    if (r.empty()) continue;
    QScalar lead = r.e.front().second;
    for (auto& [c, v] : r.e) v /= lead;
    int col = r.lead();
    by_col.emplace(col, pivots.size());
    pivots.emplace_back(col, std::move(r));
  }

  // order pivot rows by pivot column
  std::sort(pivots.begin(), pivots.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  // back-substitute to reduced form (eliminate pivot columns everywhere)
  for (int i = int(pivots.size()) - 1; i >= 0; --i) {
    int col = pivots[i].first;
    auto& prow = pivots[i].second;
    for (int j = 0; j < i; ++j) {
      auto& r = pivots[j].second;
      auto it = std::lower_bound(r.e.begin(), r.e.end(), col,
                                 [](auto& p, int c) { return p.first < c; });
      if (it == r.e.end() || it->first != col) continue;
      r = combine(r, it->second, prow, prow.e.front().second, col);
    }
  }
  for (auto& [c, row] : pivots) {
    row.clear_denominators();
    row.normalize_content();
    res.pivot_cols.push_back(c);
    res.rows.push_back(std::move(row));
  }
  return res;
}

std::vector<SparseRow> kernel_basis(const RrefResult& r) {
  std::vector<SparseRow> out;
  auto comp = r.complement_cols();
  for (int free_col : comp) {
    SparseRow v;
    // x[free_col] = 1; pivots solved from reduced rows
    std::vector<std::pair<int, QScalar>> entries;
    entries.emplace_back(free_col, QScalar(1));
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
      const SparseRow& row = r.rows[i];
      auto it = std::lower_bound(row.e.begin(), row.e.end(), free_col,
                                 [](auto& p, int c) { return p.first < c; });
      if (it == row.e.end() || it->first != free_col) continue;
      // pivot * x_pivot + coef * x_free = 0
      entries.emplace_back(r.pivot_cols[i], -(it->second / row.e.front().second));
    }
    std::sort(entries.begin(), entries.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    v.e = std::move(entries);
    v.clear_denominators();
    out.push_back(std::move(v));
  }
  return out;
}

bool same_span(const RrefResult& a, const RrefResult& b) {
  if (a.cols != b.cols || a.rank() != b.rank()) return false;
  if (a.pivot_cols != b.pivot_cols) return false;
  for (auto& r : a.rows)
    if (!b.contains(r)) return false;
  return true;
}

DenseRref rref(const QMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) rows[i].e.emplace_back(j, m.at(i, j));
  RrefResult r = sparse_rref(std::move(rows), m.cols());
  DenseRref out;
  out.rank = r.rank();
  out.pivot_columns = r.pivot_cols;
  out.row_basis = QMatrix(r.rank(), m.cols());
  for (int i = 0; i < r.rank(); ++i)
    for (auto& [c, v] : r.rows[i].e) out.row_basis.at(i, c) = v;
  auto ker = kernel_basis(r);
  out.kernel_basis = QMatrix(m.cols(), int(ker.size()));
  for (size_t k = 0; k < ker.size(); ++k)
    for (auto& [c, v] : ker[k].e) out.kernel_basis.at(c, int(k)) = v;
  return out;
}

}  // namespace qgw

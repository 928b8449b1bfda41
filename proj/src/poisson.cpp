#include "qgw/poisson.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "qgw/freenc.hpp"

namespace qgw {

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_eval(const QMatrix& m) {
  RatMat r(m.rows(), std::vector<Rat>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i][j] = m.at(i, j).at_one();
  return r;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  int n = int(a.size()), m = int(b[0].size()), k = int(b.size());
  RatMat r(n, std::vector<Rat>(m, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

RatMat rat_transpose(const RatMat& a) {
  int n = int(a.size()), m = int(a[0].size());
  RatMat r(m, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

RatMat rat_identity(int n) {
  RatMat r(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

/// Gauss-Jordan inverse; returns false on a singular input.
bool rat_inverse(RatMat a, RatMat& out) {
  int n = int(a.size());
  RatMat inv = rat_identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) return false;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rat d = a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  out = std::move(inv);
  return true;
}

/// Square CPoly matrix over the pair index space, used by the closed-form
/// assembly routes.
struct CPolyMat {
  int n = 0, nvars = 0;
  std::vector<CPoly> e;

  CPolyMat(int n, int nvars) : n(n), nvars(nvars), e(size_t(n) * n, CPoly(nvars)) {}
  CPoly& at(int r, int c) { return e[size_t(r) * n + c]; }
  const CPoly& at(int r, int c) const { return e[size_t(r) * n + c]; }

  CPolyMat mul(const CPolyMat& o) const {
    CPolyMat r(n, nvars);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }
  CPolyMat mul_const(const RatMat& m) const {
    CPolyMat r(n, nvars);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) = r.at(i, j) + at(i, k).scaled(m[k][j]);
      }
    return r;
  }
  CPolyMat lmul_const(const RatMat& m) const {
    CPolyMat r(n, nvars);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (m[i][k] == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) = r.at(i, j) + at(k, j).scaled(m[i][k]);
      }
    return r;
  }
  CPolyMat operator-(const CPolyMat& o) const {
    CPolyMat r(n, nvars);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  CPolyMat operator+(const CPolyMat& o) const {
    CPolyMat r(n, nvars);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
};

/// X1 = X (x) I and X2 = I (x) X on the pair index space.
CPolyMat leg_matrix(int N, int leg) {
  int nv = N * N;
  CPolyMat m(N * N, nv);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k)
      for (int j = 0; j < N; ++j)
        for (int l = 0; l < N; ++l) {
          if (leg == 1 && k == l)
            m.at(i * N + k, j * N + l) = CPoly::variable(nv, i * N + j);
          else if (leg == 2 && i == j)
            m.at(i * N + k, j * N + l) = CPoly::variable(nv, k * N + l);
        }
  return m;
}

std::vector<CPoly> table_from_mat(const CPolyMat& m, int N) {
  // re-key End(V (x) V) entries ((i,k),(j,l)) as table entries ((i,j),(k,l))
  int nv = N * N;
  std::vector<CPoly> table(size_t(nv) * nv, CPoly(nv));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
          table[size_t(i * N + j) * nv + (k * N + l)] = m.at(i * N + k, j * N + l);
  return table;
}

CPoly variable_product(int nv, int a, int b) {
  return CPoly::variable(nv, a) * CPoly::variable(nv, b);
}

}  // namespace

PoissonSpec ds_bracket_table(const RMatrixData& rd) {
  int N = rd.N(), nv = N * N;
  RatMat r = rat_eval(rd.r_classical);
  PoissonSpec spec{BracketKind::DS, rd.id, N, std::vector<CPoly>(size_t(nv) * nv, CPoly(nv))};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          CPoly ent(nv);
          // left-invariant legs: x^i_j pulls back along column action
          for (int a = 0; a < N; ++a)
            for (int c = 0; c < N; ++c)
              ent = ent + variable_product(nv, i * N + a, k * N + c).scaled(r[a * N + c][j * N + l]);
          // right-invariant legs
          for (int b = 0; b < N; ++b)
            for (int d = 0; d < N; ++d)
              ent = ent - variable_product(nv, b * N + j, d * N + l).scaled(r[i * N + k][b * N + d]);
          spec.table[size_t(i * N + j) * nv + (k * N + l)] = std::move(ent);
        }
  return spec;
}

std::vector<CPoly> ds_bracket_closed_form(const RMatrixData& rd) {
  int N = rd.N();
  RatMat r = rat_eval(rd.r_classical);
  CPolyMat xx = leg_matrix(N, 1).mul(leg_matrix(N, 2));
  return table_from_mat(xx.mul_const(r) - xx.lmul_const(r), N);
}

PoissonSpec sts_bracket_table(const RMatrixData& rd) {
  int N = rd.N(), nv = N * N;
  RatMat rm = rat_eval(rd.r_minus), om = rat_eval(rd.omega_rep);
  PoissonSpec spec{BracketKind::STS, rd.id, N, std::vector<CPoly>(size_t(nv) * nv, CPoly(nv))};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          CPoly ent(nv);
          // adjoint (x) adjoint expansion of the skew part: (l-r) (x) (l-r)
          for (int a = 0; a < N; ++a)
            for (int c = 0; c < N; ++c)
              ent = ent + variable_product(nv, i * N + a, k * N + c).scaled(rm[a * N + c][j * N + l]);
          for (int b = 0; b < N; ++b)
            for (int d = 0; d < N; ++d)
              ent = ent + variable_product(nv, b * N + j, d * N + l).scaled(rm[i * N + k][b * N + d]);
          for (int a = 0; a < N; ++a)
            for (int d = 0; d < N; ++d)
              ent = ent - variable_product(nv, i * N + a, d * N + l).scaled(rm[a * N + k][j * N + d]);
          for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
              ent = ent - variable_product(nv, b * N + j, k * N + c).scaled(rm[i * N + c][b * N + l]);
          // symmetric-part cross terms: right (x) left minus left (x) right
          for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
              ent = ent + variable_product(nv, b * N + j, k * N + c).scaled(om[i * N + c][b * N + l]);
          for (int a = 0; a < N; ++a)
            for (int d = 0; d < N; ++d)
              ent = ent - variable_product(nv, i * N + a, d * N + l).scaled(om[a * N + k][j * N + d]);
          spec.table[size_t(i * N + j) * nv + (k * N + l)] = std::move(ent);
        }
  return spec;
}

std::vector<CPoly> sts_bracket_closed_form(const RMatrixData& rd) {
  int N = rd.N();
  RatMat rm = rat_eval(rd.r_minus), om = rat_eval(rd.omega_rep);
  CPolyMat x1 = leg_matrix(N, 1), x2 = leg_matrix(N, 2);
  CPolyMat xx = x1.mul(x2);
  CPolyMat m = xx.mul_const(rm) + xx.lmul_const(rm) - x1.mul_const(rm).mul(x2) -
               x2.mul_const(rm).mul(x1) + x2.mul_const(om).mul(x1) - x1.mul_const(om).mul(x2);
  return table_from_mat(m, N);
}

CPoly poisson_bracket(const PoissonSpec& spec, const CPoly& f, const CPoly& g) {
  int nv = spec.N * spec.N;
  CPoly out(nv);
  std::vector<CPoly> df(nv, CPoly(nv)), dg(nv, CPoly(nv));
  for (int v = 0; v < nv; ++v) {
    df[v] = f.derivative(v);
    dg[v] = g.derivative(v);
  }
  for (int a = 0; a < nv; ++a) {
    if (df[a].is_zero()) continue;
    for (int b = 0; b < nv; ++b) {
      if (dg[b].is_zero() || spec.entry(a, b).is_zero()) continue;
      out = out + df[a] * dg[b] * spec.entry(a, b);
    }
  }
  return out;
}

CPoly jacobiator(const PoissonSpec& spec, const CPoly& f, const CPoly& g, const CPoly& h) {
  return poisson_bracket(spec, f, poisson_bracket(spec, g, h)) +
         poisson_bracket(spec, g, poisson_bracket(spec, h, f)) +
         poisson_bracket(spec, h, poisson_bracket(spec, f, g));
}

std::vector<std::vector<Rat>> cayley_points(const RMatrixData& rd, int count, unsigned seed) {
  if (rd.id.series == Series::A)
    throw std::invalid_argument("cayley_points: B/C/D metric required");
  int N = rd.N();
  RatMat b0 = rat_eval(classical_B0(rd.id));
  RatMat b0inv;
  rat_inverse(b0, b0inv);
  std::mt19937 rng(seed);
  auto small_rat = [&]() {
    int num = int(rng() % 7) - 3;
    int den = 1 + int(rng() % 3);
    Rat v(num, den);
    v.canonicalize();
    return v;
  };
  std::vector<std::vector<Rat>> points;
  while (int(points.size()) < count) {
    RatMat w(N, std::vector<Rat>(N));
    for (auto& row : w)
      for (auto& v : row) v = small_rat();
    // metric-antisymmetric part: works for symmetric and symplectic metrics
    RatMat s = rat_mul(rat_mul(b0, rat_transpose(w)), b0inv);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) s[i][j] = w[i][j] - s[i][j];
    RatMat one_plus = rat_identity(N), one_minus = rat_identity(N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        one_plus[i][j] += s[i][j];
        one_minus[i][j] -= s[i][j];
      }
    RatMat inv;
    if (!rat_inverse(one_plus, inv)) continue;  // degenerate input: retry
    RatMat x = rat_mul(one_minus, inv);
    Rat f = small_rat();
    if (f == 0) continue;
    for (auto& row : x)
      for (auto& v : row) v *= f;
    // safeguard: the point satisfies B0 X^t B0^{-1} X = f^2 exactly
    RatMat check = rat_mul(rat_mul(rat_mul(b0, rat_transpose(x)), b0inv), x);
    Rat f2 = f * f;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (check[i][j] != (i == j ? f2 : Rat(0)))
          throw std::logic_error("cayley_points: point verification failed");
    std::vector<Rat> flat(N * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) flat[i * N + j] = x[i][j];
    points.push_back(std::move(flat));
  }
  return points;
}

VarietyReport jacobi_check_on_variety(const PoissonSpec& spec, const RMatrixData& rd,
                                      int num_points, unsigned seed) {
  int N = spec.N, nv = N * N;
  VarietyReport rep;
  std::vector<CPoly> jac;
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      for (int c = b + 1; c < nv; ++c)
        jac.push_back(jacobiator(spec, CPoly::variable(nv, a), CPoly::variable(nv, b),
                                 CPoly::variable(nv, c)));
  bool identically_zero = true;
  for (auto& p : jac) identically_zero = identically_zero && p.is_zero();
  rep.symbolic = identically_zero;
  if (rd.id.series == Series::A) {
    rep.pass = rep.symbolic;
    return rep;
  }
  rep.on_variety = true;
  for (auto& point : cayley_points(rd, num_points, seed)) {
    ++rep.points_checked;
    for (auto& p : jac)
      if (p.evaluate(point) != 0) rep.on_variety = false;
  }
  // negative control: a generic integer matrix misses the quadric
  std::vector<Rat> off(nv);
  for (int v = 0; v < nv; ++v) off[v] = Rat(v + 2, 1);
  for (auto& p : jac)
    if (p.evaluate(off) != 0) rep.off_variety_nonzero = true;
  // The off-variety control is meaningful only when the bivector fails Jacobi
  // somewhere: at small symplectic rank the bracket is Poisson on the whole
  // matrix space and the control is vacuous.
  rep.pass = rep.on_variety && rep.points_checked >= num_points &&
             (rep.off_variety_nonzero || rep.symbolic);
  return rep;
}

SemiclassicalReport semiclassical_compare(const AlgebraPresentation& pres,
                                          const PoissonSpec& spec) {
  if (pres.model != GroupModel::Free || pres.alphabet.has_f)
    throw std::invalid_argument("semiclassical_compare: free matrix model expected");
  int N = spec.N, nv = N * N;
  const Alphabet& al = pres.alphabet;
  // Straightening basis: eliminate with the sorted (monomial-image) words
  // LAST, so every word class is expressed over words whose q = 1 images are
  // distinct commutative monomials. A plain normal form will not do here: a
  // generic complement basis can contain both orders of a product, and the
  // first-order data cancels when collapsed to monomials.
  DegreeBasis db = degree_basis(al, 2);
  int nwords = int(db.words.size());
  std::vector<int> perm(nwords), inv_perm(nwords);
  {
    int next = 0;
    for (int c = 0; c < nwords; ++c)
      if (!std::is_sorted(db.words[c].begin(), db.words[c].end())) perm[c] = next++;
    for (int c = 0; c < nwords; ++c)
      if (std::is_sorted(db.words[c].begin(), db.words[c].end())) perm[c] = next++;
    for (int c = 0; c < nwords; ++c) inv_perm[perm[c]] = c;
  }
  std::vector<SparseRow> rows = ideal_slice_rows(pres.relations, 2);
  for (auto& r : rows) {
    for (auto& [col, c] : r.e) col = perm[col];
    std::sort(r.e.begin(), r.e.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  RrefResult straight = sparse_rref(std::move(rows), nwords);

  // Relation combinations whose straightened form is supported on sorted
  // words only: their q = 1 images are quadric relations already present in
  // the free matrix algebra (the metric series have them, series A does not).
  // Brackets of coordinate functions agree only modulo this classical ideal.
  int unsorted_count = 0;
  for (int c = 0; c < nwords; ++c)
    if (!std::is_sorted(db.words[c].begin(), db.words[c].end())) ++unsorted_count;
  std::vector<std::map<int, Rat>> quadrics;
  for (size_t i = 0; i < straight.pivot_cols.size(); ++i) {
    if (straight.pivot_cols[i] < unsorted_count) continue;
    std::map<int, Rat> row;
    for (auto& [col, c] : straight.rows[i].e) {
      Rat v = c.at_one();
      if (v != 0) row[col] = v;
    }
    if (!row.empty()) quadrics.push_back(std::move(row));
  }
  // reduced echelon form over the rationals
  for (size_t i = 0; i < quadrics.size(); ++i) {
    for (size_t j = 0; j < quadrics.size(); ++j) {
      if (i == j || quadrics[i].empty() || quadrics[j].empty()) continue;
      auto it = quadrics[j].find(quadrics[i].begin()->first);
      if (it == quadrics[j].end()) continue;
      Rat f = it->second / quadrics[i].begin()->second;
      for (auto& [col, v] : quadrics[i]) {
        Rat& slot = quadrics[j][col];
        slot -= f * v;
        if (slot == 0) quadrics[j].erase(col);
      }
    }
  }
  auto reduce_mod_quadrics = [&](std::map<int, Rat> vec) {
    for (auto& row : quadrics) {
      if (row.empty()) continue;
      auto it = vec.find(row.begin()->first);
      if (it == vec.end()) continue;
      Rat f = it->second / row.begin()->second;
      for (auto& [col, v] : row) {
        Rat& slot = vec[col];
        slot -= f * v;
        if (slot == 0) vec.erase(col);
      }
    }
    return vec;
  };
  auto classical_vec = [&](const CPoly& p) {
    std::map<int, Rat> vec;
    for (auto& [m, v] : p.t) {
      Word w;
      for (int l = 0; l < int(m.size()); ++l)
        for (int rptd = 0; rptd < m[l]; ++rptd) w.push_back(uint8_t(l));
      vec[perm[db.index.at(w)]] += v;
    }
    for (auto it = vec.begin(); it != vec.end();)
      it = (it->second == 0) ? vec.erase(it) : std::next(it);
    return vec;
  };

  SemiclassicalReport rep;
  rep.pass = true;
  for (int s = 0; s < nv; ++s)
    for (int t = 0; t < nv; ++t) {
      SparseRow comm;
      int c1 = perm[db.index.at(Word{uint8_t(s), uint8_t(t)})];
      int c2 = perm[db.index.at(Word{uint8_t(t), uint8_t(s)})];
      if (c1 == c2) {
        ++rep.pairs_checked;
        if (!reduce_mod_quadrics(classical_vec(spec.entry(s, t))).empty())
          rep.pass = false;
        continue;
      }
      comm.e = {{std::min(c1, c2), QScalar(c1 < c2 ? 1 : -1)},
                {std::max(c1, c2), QScalar(c1 < c2 ? -1 : 1)}};
      // scale-preserving elimination (RrefResult::reduce renormalizes rows,
      // which is fine for span tests but would destroy the 1/(q-1) scale)
      std::map<int, QScalar> acc(comm.e.begin(), comm.e.end());
      for (size_t i = 0; i < straight.pivot_cols.size(); ++i) {
        auto it = acc.find(straight.pivot_cols[i]);
        if (it == acc.end() || it->second.is_zero()) continue;
        QScalar f = it->second / straight.rows[i].e.front().second;
        for (auto& [col, c] : straight.rows[i].e) {
          auto& slot = acc[col];
          slot -= f * c;
          if (slot.is_zero()) acc.erase(col);
        }
      }
      // first-order classical shadow over the sorted-word columns
      std::map<int, Rat> quantum_side;
      for (auto& [col, c] : acc) {
        if (c.is_zero()) continue;
        const Word& w = db.words[inv_perm[col]];
        if (!std::is_sorted(w.begin(), w.end()) || c.at_one() != 0) {
          rep.pass = false;  // straightening failed or no q = 1 commutativity
          continue;
        }
        Rat v = c.derivative_at_one();
        if (v != 0) quantum_side[col] = v;
      }
      quantum_side = reduce_mod_quadrics(std::move(quantum_side));
      std::map<int, Rat> classical =
          reduce_mod_quadrics(classical_vec(spec.entry(s, t)));
      ++rep.pairs_checked;
      if (classical.empty()) {
        if (!quantum_side.empty()) rep.pass = false;
        continue;
      }
      if (quantum_side.empty()) {
        rep.pass = false;
        continue;
      }
      auto lead = classical.find(quantum_side.begin()->first);
      if (lead == classical.end() || lead->second == 0) {
        rep.pass = false;
        continue;
      }
      Rat ratio = quantum_side.begin()->second / lead->second;
      if (!rep.c_found) {
        rep.c = ratio;
        rep.c_found = true;
      }
      std::map<int, Rat> scaled;
      for (auto& [col, v] : classical) scaled[col] = v * rep.c;
      if (quantum_side != scaled) rep.pass = false;
    }
  if (!rep.c_found || rep.c == 0) rep.pass = false;
  return rep;
}

}  // namespace qgw

#include "qgw/qfun.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgw {

AlgKind kind_from_string(const std::string& s) {
  if (s == "frt") return AlgKind::FRT;
  if (s == "re") return AlgKind::RE;
  if (s == "classical") return AlgKind::CLASSICAL;
  throw std::runtime_error("unknown algebra kind: " + s);
}

std::string kind_name(AlgKind k) {
  switch (k) {
    case AlgKind::FRT: return "frt";
    case AlgKind::RE: return "re";
    case AlgKind::CLASSICAL: return "classical";
  }
  return "?";
}

NCMatrix NCMatrix::generators(const Alphabet& a, bool transposed) {
  NCMatrix m(a.N);
  for (int i = 0; i < a.N; ++i)
    for (int j = 0; j < a.N; ++j) {
      Word w{uint8_t(a.t_symbol(transposed ? j : i, transposed ? i : j))};
      m.at(i, j).add_term(std::move(w), QScalar(1));
    }
  return m;
}

NCMatrix NCMatrix::constant(const QMatrix& c) {
  NCMatrix m(c.rows());
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j)
      if (!c.at(i, j).is_zero()) m.at(i, j).add_term(Word{}, c.at(i, j));
  return m;
}

NCMatrix NCMatrix::mul(const NCMatrix& o, const Alphabet& a) const {
  NCMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly acc;
      for (int k = 0; k < n; ++k) acc = acc + at(i, k).concat(o.at(k, j), a);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

NCMatrix NCMatrix::operator-(const NCMatrix& o) const {
  NCMatrix r(n);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

namespace {

// (T1 T2)[(a,b),(c,d)] = T^a_c T^b_d as an N^2 x N^2 matrix over words.
NCMatrix t1t2(const Alphabet& a, bool swapped) {
  int N = a.N;
  NCMatrix m(N * N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q)
      for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s) {
          Word w = swapped ? Word{uint8_t(a.t_symbol(q, s)), uint8_t(a.t_symbol(p, r))}
                           : Word{uint8_t(a.t_symbol(p, r)), uint8_t(a.t_symbol(q, s))};
          m.at(p * N + q, r * N + s).add_term(std::move(w), QScalar(1));
        }
  return m;
}

NCMatrix k_leg(const Alphabet& a, int leg) {
  int N = a.N;
  NCMatrix m(N * N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q)
      for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s) {
          if (leg == 1 && q != s) continue;
          if (leg == 2 && p != r) continue;
          Word w{uint8_t(leg == 1 ? a.t_symbol(p, r) : a.t_symbol(q, s))};
          m.at(p * N + q, r * N + s).add_term(std::move(w), QScalar(1));
        }
  return m;
}

std::vector<NCPoly> entries(const NCMatrix& m) {
  std::vector<NCPoly> out;
  out.reserve(m.e.size());
  for (auto& p : m.e)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

Word f_power(int k) { return Word(size_t(k), uint8_t(0)); }

// Re-express a polynomial written over the f-free alphabet in an alphabet
// that carries f (letter indices shift by one).
NCPoly lift_to_f_alphabet(const NCPoly& p) {
  NCPoly r;
  for (auto& [w, c] : p.t) {
    Word lw(w);
    for (auto& s : lw) s = uint8_t(s + 1);
    r.add_term(std::move(lw), c);
  }
  return r;
}

}  // namespace

std::vector<NCPoly> frt_relation_polys(const RMatrixData& rd, const Alphabet& a) {
  NCMatrix lhs = NCMatrix::constant(rd.R).mul(t1t2(a, false), a);
  NCMatrix rhs = t1t2(a, true).mul(NCMatrix::constant(rd.R), a);
  return entries(lhs - rhs);
}

std::vector<NCPoly> re_relation_polys(const RMatrixData& rd, const Alphabet& a) {
  int N = rd.N();
  QMatrix P = flip_matrix(N);
  QMatrix R21 = P * rd.R * P;
  NCMatrix k1 = k_leg(a, 1), k2 = k_leg(a, 2);
  NCMatrix c21 = NCMatrix::constant(R21), c12 = NCMatrix::constant(rd.R);
  NCMatrix core = c21.mul(k1, a).mul(c12, a);
  NCMatrix lhs = core.mul(k2, a);
  NCMatrix rhs = k2.mul(core, a);
  return entries(lhs - rhs);
}

RelationSet frt_relations(const RMatrixData& rd, bool with_f) {
  Alphabet a{rd.N(), with_f};
  return RelationSet(a, frt_relation_polys(rd, a));
}

RelationSet re_relations(const RMatrixData& rd, bool with_f) {
  Alphabet a{rd.N(), with_f};
  return RelationSet(a, re_relation_polys(rd, a));
}

std::map<Word, Rat> commutative_image_at_one(const NCPoly& p) {
  std::map<Word, Rat> img;
  for (auto& [w, c] : p.t) {
    Word s(w);
    std::sort(s.begin(), s.end());
    img[s] += c.at_one();
  }
  for (auto it = img.begin(); it != img.end();)
    it = (it->second == 0) ? img.erase(it) : std::next(it);
  return img;
}

NCPoly quantum_determinant(const RMatrixData& rd, AlgKind kind) {
  if (rd.id.series != Series::A) throw std::runtime_error("quantum_determinant: series A only");
  if (kind == AlgKind::CLASSICAL) throw std::runtime_error("quantum_determinant: quantum kinds only");
  int N = rd.N();
  Alphabet a{N, false};
  RelationSet rels = (kind == AlgKind::FRT) ? frt_relations(rd) : re_relations(rd);
  GradedQuotient gq(rels, N + 1);
  std::vector<NCPoly> cen = centralizer_basis(gq, N);
  if (cen.empty()) throw std::runtime_error("quantum_determinant: empty degree-N centralizer");

  // classical determinant as a commutative target
  std::map<Word, Rat> target;
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sgn = 1;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (perm[i] > perm[j]) sgn = -sgn;
    Word w;
    for (int i = 0; i < N; ++i) w.push_back(uint8_t(a.t_symbol(i, perm[i])));
    std::sort(w.begin(), w.end());
    target[w] += sgn;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::map<Word, Rat>> imgs;
  std::map<Word, int> mono_index;
  for (auto& c : cen) {
    imgs.push_back(commutative_image_at_one(c));
    for (auto& [w, v] : imgs.back()) mono_index.emplace(w, 0);
  }
  for (auto& [w, v] : target) mono_index.emplace(w, 0);
  int nm = 0;
  for (auto& [w, ix] : mono_index) ix = nm++;

  int k = int(cen.size());
  QMatrix sys(nm, k + 1);
  for (int col = 0; col < k; ++col)
    for (auto& [w, v] : imgs[col]) sys.at(mono_index[w], col) = QScalar(v);
  for (auto& [w, v] : target) sys.at(mono_index[w], k) = QScalar(v);
  // particular solution with free variables set to zero; this pins down a
  // canonical lift even when the centralizer contains directions whose
  // classical limit vanishes
  DenseRref d = rref(sys);
  NCPoly det;
  for (int r = 0; r < d.rank; ++r) {
    int pc = d.pivot_columns[r];
    if (pc == k) throw std::runtime_error("quantum_determinant: no central lift of det");
    QScalar coef = d.row_basis.at(r, k) / d.row_basis.at(r, pc);
    if (!coef.is_zero()) det = det + cen[pc].scaled(coef);
  }
  if (commutative_image_at_one(det) != target)
    throw std::runtime_error("quantum_determinant: classical limit mismatch");
  return det;
}

std::vector<NCPoly> re_metric_relation_polys(const RMatrixData& rd, const Alphabet& a) {
  int N = rd.N();
  const QMatrix& R = rd.R;
  const QMatrix& Rinv = rd.R_inv;
  const QMatrix& B = rd.B_form;
  QMatrix Binv = B.inverse();
  std::vector<NCPoly> out;

  // twisted T^t B^{-1} T = B^{-1} f^2 in sandwich form: the inverse-R copy is
  // contracted against B^{-1} into the constant middle matrix M, and the
  // direct copy routes the lower index of the first K to the upper index of
  // the second:
  //   sum M[w,x] R[(u,x),(i,d)] K^w_u K^d_j = f^2 B^{-1}[i,j],
  //   M[w,x] = sum B^{-1}[a,b] R^{-1}[(a,b),(w,x)]
  QMatrix M(N, N);
  for (int w = 0; w < N; ++w)
    for (int x = 0; x < N; ++x) {
      QScalar acc;
      for (int av = 0; av < N; ++av)
        for (int b = 0; b < N; ++b) acc = acc + Binv.at(av, b) * Rinv.at(av * N + b, w * N + x);
      M.at(w, x) = acc;
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      NCPoly rel;
      for (int w = 0; w < N; ++w)
        for (int x = 0; x < N; ++x) {
          if (M.at(w, x).is_zero()) continue;
          for (int u = 0; u < N; ++u)
            for (int dg = 0; dg < N; ++dg) {
              QScalar coef = M.at(w, x) * R.at(u * N + x, i * N + dg);
              if (coef.is_zero()) continue;
              rel.add_term(Word{uint8_t(a.t_symbol(w, u)), uint8_t(a.t_symbol(dg, j))}, coef);
            }
        }
      if (!Binv.at(i, j).is_zero()) rel.add_term(f_power(2), QScalar(0) - Binv.at(i, j));
      if (!rel.is_zero()) out.push_back(std::move(rel));
    }

  // printed sandwich form of twisted T B T^t = B f^2:
  //   sum R[(c,j),(a,d)] B[a,b] K^i_c K^d_b = f^2 sum R[(i,j),(a,b)] B[a,b]
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      NCPoly rel;
      QScalar cst;
      for (int av = 0; av < N; ++av)
        for (int b = 0; b < N; ++b) {
          if (B.at(av, b).is_zero()) continue;
          cst = cst + R.at(i * N + j, av * N + b) * B.at(av, b);
          for (int c = 0; c < N; ++c)
            for (int dg = 0; dg < N; ++dg) {
              QScalar coef = R.at(c * N + j, av * N + dg) * B.at(av, b);
              if (coef.is_zero()) continue;
              rel.add_term(Word{uint8_t(a.t_symbol(i, c)), uint8_t(a.t_symbol(dg, b))}, coef);
            }
        }
      if (!cst.is_zero()) rel.add_term(f_power(2), QScalar(0) - cst);
      if (!rel.is_zero()) out.push_back(std::move(rel));
    }
  return out;
}

std::vector<NCPoly> sharp_relation_polys(const RMatrixData& rd, AlgKind kind) {
  Alphabet a{rd.N(), true};
  std::vector<NCPoly> out;
  if (rd.id.series == Series::A) {
    NCPoly rel = lift_to_f_alphabet(quantum_determinant(rd, kind));
    rel.add_term(f_power(rd.N()), QScalar(-1));
    out.push_back(std::move(rel));
    return out;
  }
  if (kind == AlgKind::RE) return re_metric_relation_polys(rd, a);
  // FRT side: B T^t B^{-1} T = f^2, T B T^t B^{-1} = f^2
  NCMatrix T = NCMatrix::generators(a, false);
  NCMatrix Tt = NCMatrix::generators(a, true);
  NCMatrix cB = NCMatrix::constant(rd.B_form);
  NCMatrix cBinv = NCMatrix::constant(rd.B_form.inverse());
  NCPoly f2;
  f2.add_term(f_power(2), QScalar(1));
  NCMatrix f2i(rd.N());
  for (int i = 0; i < rd.N(); ++i) f2i.at(i, i) = f2;
  NCMatrix m1 = cB.mul(Tt, a).mul(cBinv, a).mul(T, a) - f2i;
  NCMatrix m2 = T.mul(cB, a).mul(Tt, a).mul(cBinv, a) - f2i;
  for (auto& v : {entries(m1), entries(m2)}) out.insert(out.end(), v.begin(), v.end());
  return out;
}

AlgebraPresentation build_presentation(const RMatrixData& rd, AlgKind kind, GroupModel model) {
  if (kind == AlgKind::CLASSICAL)
    throw std::runtime_error("build_presentation: use classical_of for the oracle");
  AlgebraPresentation p;
  p.kind = kind;
  p.model = model;
  p.id = rd.id;
  p.alphabet = Alphabet{rd.N(), model == GroupModel::Sharp};
  std::vector<NCPoly> rels = (kind == AlgKind::FRT) ? frt_relation_polys(rd, p.alphabet)
                                                    : re_relation_polys(rd, p.alphabet);
  if (model == GroupModel::Sharp) {
    auto extra = sharp_relation_polys(rd, kind);
    rels.insert(rels.end(), extra.begin(), extra.end());
  }
  p.relations = RelationSet(p.alphabet, std::move(rels));
  return p;
}

AlgebraPresentation classical_of(const AlgebraPresentation& p) {
  AlgebraPresentation c;
  c.kind = AlgKind::CLASSICAL;
  c.model = p.model;
  c.id = p.id;
  c.alphabet = p.alphabet;
  std::vector<NCPoly> rels;
  for (auto& r : p.relations.relations()) {
    NCPoly s = r.evaluate_at_one();
    if (!s.is_zero()) rels.push_back(std::move(s));
  }
  const Alphabet& a = c.alphabet;
  int base = a.has_f ? 1 : 0;
  for (int s = base; s < a.size(); ++s)
    for (int t2 = s + 1; t2 < a.size(); ++t2) {
      NCPoly comm;
      comm.add_term(Word{uint8_t(s), uint8_t(t2)}, QScalar(1));
      comm.add_term(Word{uint8_t(t2), uint8_t(s)}, QScalar(-1));
      rels.push_back(std::move(comm));
    }
  c.relations = RelationSet(a, std::move(rels));
  return c;
}

FlatnessReport flatness_check(const AlgebraPresentation& p, int d_max) {
  FlatnessReport rep;
  GradedQuotient q(p.relations, d_max);
  GradedQuotient c(classical_of(p).relations, d_max);
  rep.quantum_dims = q.dims();
  rep.classical_dims = c.dims();
  rep.pass = rep.quantum_dims == rep.classical_dims;
  return rep;
}

std::vector<int> unitf_filtered_dims(const AlgebraPresentation& sharp, int d_max) {
  if (!sharp.alphabet.has_f) throw std::runtime_error("unitf_filtered_dims: sharp model required");
  Alphabet a{sharp.alphabet.N, false};
  // dehomogenize: drop f letters (f = 1)
  std::vector<NCPoly> rels;
  for (auto& r : sharp.relations.relations()) {
    NCPoly s;
    for (auto& [w, c] : r.t) {
      Word v;
      for (auto l : w)
        if (l != 0) v.push_back(uint8_t(l - 1));
      s.add_term(std::move(v), c);
    }
    if (!s.is_zero()) rels.push_back(std::move(s));
  }
  // filtration basis: all words of length <= d, ordered by (length, lex)
  std::vector<int> dims;
  for (int d = 0; d <= d_max; ++d) {
    std::unordered_map<Word, int, WordHash> index;
    int cols = 0;
    std::vector<DegreeBasis> per_len;
    for (int l = 0; l <= d; ++l) {
      per_len.push_back(degree_basis(a, l));
      for (auto& w : per_len.back().words) index.emplace(w, cols++);
    }
    std::vector<SparseRow> rows;
    for (auto& rel : rels) {
      int top = 0;
      for (auto& [w, c] : rel.t) top = std::max(top, int(w.size()));
      for (int la = 0; la + top <= d; ++la)
        for (int lb = 0; la + lb + top <= d; ++lb)
          for (auto& u : per_len[la].words)
            for (auto& v : per_len[lb].words) {
              std::map<int, QScalar> acc;
              for (auto& [w, c] : rel.t) {
                Word full;
                full.insert(full.end(), u.begin(), u.end());
                full.insert(full.end(), w.begin(), w.end());
                full.insert(full.end(), v.begin(), v.end());
                acc[index.at(full)] += c;
              }
              SparseRow row;
              for (auto& [cix, cv] : acc)
                if (!cv.is_zero()) row.e.emplace_back(cix, cv);
              if (!row.empty()) rows.push_back(std::move(row));
            }
    }
    RrefResult r = sparse_rref(std::move(rows), cols);
    dims.push_back(cols - r.rank());
  }
  return dims;
}

}  // namespace qgw

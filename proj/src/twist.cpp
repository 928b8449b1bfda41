#include "qgw/twist.hpp"

#include <stdexcept>

namespace qgw {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// digits of a multi-index, leg 0 most significant
int digit(int idx, int leg, int n, int N) { return (idx / ipow(N, n - 1 - leg)) % N; }
int with_digit(int idx, int leg, int n, int N, int v) {
  int p = ipow(N, n - 1 - leg);
  return idx + (v - digit(idx, leg, n, N)) * p;
}

// R acting on legs (a, b) of V^(x n), a < b
QMatrix embed_pair(const QMatrix& R, int N, int n, int a, int b) {
  int dim = ipow(N, n);
  QMatrix M(dim, dim);
  for (int row = 0; row < dim; ++row) {
    int ra = digit(row, a, n, N), rb = digit(row, b, n, N);
    for (int ca = 0; ca < N; ++ca)
      for (int cb = 0; cb < N; ++cb) {
        const QScalar& v = R.at(ra * N + rb, ca * N + cb);
        if (v.is_zero()) continue;
        int col = with_digit(with_digit(row, a, n, N, ca), b, n, N, cb);
        M.at(row, col) = v;
      }
  }
  return M;
}

// ordered product of a pairwise matrix embedded on every (block1, block2) leg
// pair; style bit 0 reverses block-1 order, bit 1 reverses block-2 order
QMatrix spread_product(const QMatrix& pairwise, int N, int m, int k, int st) {
  bool i_asc = (st & 1) == 0, j_asc = (st & 2) == 0;
  QMatrix acc = QMatrix::identity(ipow(N, m + k));
  for (int ii = 0; ii < m; ++ii) {
    int i = i_asc ? ii : m - 1 - ii;
    for (int jj = 0; jj < k; ++jj) {
      int j = j_asc ? jj : k - 1 - jj;
      acc = acc * embed_pair(pairwise, N, m + k, i, m + j);
    }
  }
  return acc;
}

}  // namespace

GeneratorCocycle::GeneratorCocycle(const RMatrixData& rd) : n_(rd.N()), R_(rd.R), Rinv_(rd.R_inv) {}

GeneratorCocycle generator_cocycle(const RMatrixData& rd) { return GeneratorCocycle(rd); }

// upper op: block spread of R^{-1} acting on the upper multi-indices of both
// blocks
QMatrix GeneratorCocycle::spread_upper(int m, int k) const {
  auto key = std::make_pair(m, k);
  auto it = spread_memo_.find(key);
  if (it != spread_memo_.end()) return it->second;
  QMatrix v = spread_product(Rinv_, n_, m, k, kUpStyle);
  spread_memo_.emplace(key, v);
  return v;
}

// flow op: block spread of the (lower-block1, upper-block2) action of R,
// assembled in the flow orientation A[(u,x'),(i,x)] = R[(u,x),(i,x')] and
// stored back in the R-like orientation used by apply_F
QMatrix GeneratorCocycle::spread_flow(int m, int k) const {
  auto key = std::make_pair(m, k);
  auto it = spread_inv_memo_.find(key);
  if (it != spread_inv_memo_.end()) return it->second;
  int N = n_;
  int dm = ipow(N, m), dk = ipow(N, k);
  QMatrix A1(N * N, N * N);
  for (int u = 0; u < N; ++u)
    for (int x = 0; x < N; ++x)
      for (int i = 0; i < N; ++i)
        for (int x2 = 0; x2 < N; ++x2) A1.at(u * N + x2, i * N + x) = R_.at(u * N + x, i * N + x2);
  QMatrix A = spread_product(A1, N, m, k, kFlowStyle);
  QMatrix phi(dm * dk, dm * dk);
  for (int u = 0; u < dm; ++u)
    for (int x = 0; x < dk; ++x)
      for (int i = 0; i < dm; ++i)
        for (int d = 0; d < dk; ++d) phi.at(u * dk + x, i * dk + d) = A.at(u * dk + d, i * dk + x);
  spread_inv_memo_.emplace(key, phi);
  return phi;
}

namespace {

struct BlockIdx {
  std::vector<int> up, lo;
};

BlockIdx word_indices(const Word& w, const Alphabet& a) {
  BlockIdx b;
  for (auto l : w) {
    auto [i, j] = a.t_indices(l);
    b.up.push_back(i);
    b.lo.push_back(j);
  }
  return b;
}

int pack(const std::vector<int>& digits, int from, int to, int N) {
  int v = 0;
  for (int i = from; i < to; ++i) v = v * N + digits[i];
  return v;
}

}  // namespace

NCPoly GeneratorCocycle::apply_F(const NCPoly& p, const Alphabet& a, int m, int k,
                                 bool inverse) const {
  int N = n_;
  int dm = ipow(N, m), dk = ipow(N, k);
  // forward: flow op after upper op; inverse: upper-op inverse after flow-op
  // inverse, each inverted in its own acting orientation
  QMatrix upper_op = spread_upper(m, k);
  QMatrix flow = spread_flow(m, k);
  if (inverse) {
    upper_op = upper_op.inverse();
    QMatrix A(dm * dk, dm * dk);
    for (int u = 0; u < dm; ++u)
      for (int x = 0; x < dk; ++x)
        for (int i = 0; i < dm; ++i)
          for (int d = 0; d < dk; ++d) A.at(u * dk + d, i * dk + x) = flow.at(u * dk + x, i * dk + d);
    QMatrix Ainv = A.inverse();
    QMatrix S(dm * dk, dm * dk);
    for (int u = 0; u < dm; ++u)
      for (int x = 0; x < dk; ++x)
        for (int i = 0; i < dm; ++i)
          for (int d = 0; d < dk; ++d) S.at(u * dk + x, i * dk + d) = Ainv.at(u * dk + d, i * dk + x);
    flow = S;
  }

  auto op_flow = [&](const NCPoly& q) {
    NCPoly out;
    for (auto& [w, c] : q.t) {
      BlockIdx b = word_indices(w, a);
      int I = pack(b.lo, 0, m, N), X = pack(b.up, m, m + k, N);
      for (int U = 0; U < dm; ++U)
        for (int D = 0; D < dk; ++D) {
          const QScalar& v = flow.at(U * dk + X, I * dk + D);
          if (v.is_zero()) continue;
          Word nw;
          for (int s = 0; s < m; ++s)
            nw.push_back(uint8_t(a.t_symbol(b.up[s], digit(U, s, m, N))));
          for (int s = 0; s < k; ++s)
            nw.push_back(uint8_t(a.t_symbol(digit(D, s, k, N), b.lo[m + s])));
          out.add_term(std::move(nw), c * v);
        }
    }
    return out;
  };

  auto op_upper = [&](const NCPoly& q) {
    NCPoly out;
    for (auto& [w, c] : q.t) {
      BlockIdx b = word_indices(w, a);
      int P = pack(b.up, 0, m, N), Rj = pack(b.up, m, m + k, N);
      for (int W = 0; W < dm; ++W)
        for (int X = 0; X < dk; ++X) {
          const QScalar& v = upper_op.at(P * dk + Rj, W * dk + X);
          if (v.is_zero()) continue;
          Word nw;
          for (int s = 0; s < m; ++s)
            nw.push_back(uint8_t(a.t_symbol(digit(W, s, m, N), b.lo[s])));
          for (int s = 0; s < k; ++s)
            nw.push_back(uint8_t(a.t_symbol(digit(X, s, k, N), b.lo[m + s])));
          out.add_term(std::move(nw), c * v);
        }
    }
    return out;
  };

  return inverse ? op_upper(op_flow(p)) : op_flow(op_upper(p));
}

NCPoly GeneratorCocycle::transport_word(const Word& w, const Alphabet& a, bool inverse) const {
  if (w.size() <= 1) {
    NCPoly p;
    p.add_term(w, QScalar(1));
    return p;
  }
  auto& memo = inverse ? inv_memo_ : fwd_memo_;
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  int n = int(w.size()), m = n - 1;
  NCPoly result;
  if (!inverse) {
    // Omega_n = (Omega_m x id) . F_(m,1)
    NCPoly one;
    one.add_term(w, QScalar(1));
    NCPoly mid = apply_F(one, a, m, 1, false);
    for (auto& [mw, c] : mid.t) {
      Word prefix(mw.begin(), mw.end() - 1);
      NCPoly pre = transport_word(prefix, a, false);
      for (auto& [pw, pc] : pre.t) {
        Word full(pw);
        full.push_back(mw.back());
        result.add_term(std::move(full), c * pc);
      }
    }
  } else {
    Word prefix(w.begin(), w.end() - 1);
    NCPoly pre = transport_word(prefix, a, true);
    NCPoly withlast;
    for (auto& [pw, c] : pre.t) {
      Word full(pw);
      full.push_back(w.back());
      withlast.add_term(std::move(full), c);
    }
    result = apply_F(withlast, a, m, 1, true);
  }
  memo.emplace(w, result);
  return result;
}

NCPoly GeneratorCocycle::transport_word_split(const Word& w, const Alphabet& a, int m) const {
  int n = int(w.size());
  if (m <= 0 || m >= n) throw std::runtime_error("transport_word_split: bad partition");
  Word left(w.begin(), w.begin() + m), right(w.begin() + m, w.end());
  (void)left;
  NCPoly one;
  one.add_term(w, QScalar(1));
  NCPoly mid = apply_F(one, a, m, n - m, false);
  NCPoly result;
  for (auto& [mw, c] : mid.t) {
    Word lw(mw.begin(), mw.begin() + m), rw(mw.begin() + m, mw.end());
    NCPoly pl = transport_word(lw, a, false), pr = transport_word(rw, a, false);
    for (auto& [plw, plc] : pl.t)
      for (auto& [prw, prc] : pr.t) {
        Word full(plw);
        full.insert(full.end(), prw.begin(), prw.end());
        result.add_term(std::move(full), c * plc * prc);
      }
  }
  return result;
}

namespace {

NCPoly map_letters(const NCPoly& p, int delta) {
  NCPoly out;
  for (auto& [w, c] : p.t) {
    Word v(w);
    for (auto& l : v) l = uint8_t(int(l) + delta);
    out.add_term(std::move(v), c);
  }
  return out;
}

}  // namespace

NCPoly GeneratorCocycle::transport(const NCPoly& p, const Alphabet& a) const {
  Alphabet plain{n_, false};
  int base = a.has_f ? 1 : 0;
  NCPoly out;
  for (auto& [w, c] : p.t) {
    size_t nf = 0;
    while (nf < w.size() && a.is_f(w[nf])) ++nf;
    Word rest(w.begin() + nf, w.end());
    if (base) for (auto& l : rest) l = uint8_t(l - 1);
    NCPoly tr = transport_word(rest, plain, false);
    if (base) tr = map_letters(tr, 1);
    for (auto& [tw, tc] : tr.t) {
      Word full(w.begin(), w.begin() + nf);
      full.insert(full.end(), tw.begin(), tw.end());
      out.add_term(std::move(full), c * tc);
    }
  }
  return out;
}

NCPoly GeneratorCocycle::transport_inv(const NCPoly& p, const Alphabet& a) const {
  Alphabet plain{n_, false};
  int base = a.has_f ? 1 : 0;
  NCPoly out;
  for (auto& [w, c] : p.t) {
    size_t nf = 0;
    while (nf < w.size() && a.is_f(w[nf])) ++nf;
    Word rest(w.begin() + nf, w.end());
    if (base) for (auto& l : rest) l = uint8_t(l - 1);
    NCPoly tr = transport_word(rest, plain, true);
    if (base) tr = map_letters(tr, 1);
    for (auto& [tw, tc] : tr.t) {
      Word full(w.begin(), w.begin() + nf);
      full.insert(full.end(), tw.begin(), tw.end());
      out.add_term(std::move(full), c * tc);
    }
  }
  return out;
}

QMatrix GeneratorCocycle::f2_matrix() const {
  Alphabet a{n_, false};
  int n2 = n_ * n_, dim = n2 * n2;
  QMatrix F(dim, dim);
  for (int s = 0; s < n2; ++s)
    for (int t = 0; t < n2; ++t) {
      Word w{uint8_t(s), uint8_t(t)};
      NCPoly img = transport_word(w, a, false);
      for (auto& [iw, c] : img.t) F.at(int(iw[0]) * n2 + int(iw[1]), s * n2 + t) = c;
    }
  return F;
}

RelationSet transport_ideal(const RelationSet& w, const GeneratorCocycle& gc) {
  std::vector<NCPoly> out;
  for (auto& r : w.relations()) out.push_back(gc.transport(r, w.alphabet()));
  return RelationSet(w.alphabet(), std::move(out));
}

namespace {

RrefResult span_of(const std::vector<NCPoly>& ps, const DegreeBasis& b) {
  std::vector<SparseRow> rows;
  for (auto& p : ps) {
    if (p.is_zero()) continue;
    SparseRow r;
    for (auto& [w, c] : p.t) r.e.emplace_back(b.index.at(w), c);
    rows.push_back(std::move(r));
  }
  return sparse_rref(std::move(rows), int(b.words.size()));
}

}  // namespace

TwistReport verify_twist_correspondence(const RMatrixData& rd) {
  TwistReport rep;
  GeneratorCocycle gc(rd);
  Alphabet plain{rd.N(), false};
  DegreeBasis b2 = degree_basis(plain, 2);
  auto frt = frt_relation_polys(rd, plain);
  auto re = re_relation_polys(rd, plain);
  std::vector<NCPoly> moved;
  for (auto& r : frt) moved.push_back(gc.transport(r, plain));
  rep.quadratic_match = same_span(span_of(moved, b2), span_of(re, b2));

  if (rd.id.series != Series::A) {
    Alphabet af{rd.N(), true};
    DegreeBasis bf2 = degree_basis(af, 2);
    auto sharp = sharp_relation_polys(rd, AlgKind::FRT);
    std::vector<NCPoly> msharp;
    for (auto& r : sharp) msharp.push_back(gc.transport(r, af));
    rep.sharp_match = same_span(span_of(msharp, bf2), span_of(re_metric_relation_polys(rd, af), bf2));
  }

  rep.partition_independent = true;
  DegreeBasis b3 = degree_basis(plain, 3);
  for (auto& w : b3.words) {
    NCPoly a = gc.transport_word_split(w, plain, 1);
    NCPoly b = gc.transport_word_split(w, plain, 2);
    if (!(a - b).is_zero()) {
      rep.partition_independent = false;
      break;
    }
  }
  rep.pass = rep.quadratic_match && rep.sharp_match && rep.partition_independent;
  return rep;
}

}  // namespace qgw

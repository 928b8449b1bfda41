#include "qgw/freenc.hpp"

#include <algorithm>
#include <sstream>

namespace qgw {

std::pair<int, int> Alphabet::t_indices(int s) const {
  int k = s - (has_f ? 1 : 0);
  return {k / N, k % N};
}

std::string Alphabet::symbol_name(int s, const std::string& letter) const {
  if (is_f(s)) return "f";
  auto [i, j] = t_indices(s);
  std::ostringstream os;
  os << letter << (i + 1) << "_" << (j + 1);
  return os.str();
}

Word canonical_word(const Alphabet& a, Word w) {
  if (!a.has_f) return w;
  std::stable_partition(w.begin(), w.end(), [](uint8_t s) { return s == 0; });
  return w;
}

void NCPoly::add_term(Word w, QScalar c) {
  if (c.is_zero()) return;
  auto it = t.find(w);
  if (it == t.end()) {
    t.emplace(std::move(w), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  for (auto& [w, c] : o.t) r.add_term(w, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  for (auto& [w, c] : o.t) r.add_term(w, -c);
  return r;
}

NCPoly NCPoly::scaled(const QScalar& s) const {
  NCPoly r;
  if (s.is_zero()) return r;
  for (auto& [w, c] : t) r.t.emplace(w, c * s);
  return r;
}

int NCPoly::degree() const {
  if (t.empty()) return 0;
  int d = int(t.begin()->first.size());
  for (auto& [w, c] : t)
    if (int(w.size()) != d) return -1;
  return d;
}

NCPoly NCPoly::concat(const NCPoly& o, const Alphabet& a) const {
  NCPoly r;
  for (auto& [w1, c1] : t)
    for (auto& [w2, c2] : o.t) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(canonical_word(a, std::move(w)), c1 * c2);
    }
  return r;
}

NCPoly NCPoly::evaluate_at_one() const {
  NCPoly r;
  for (auto& [w, c] : t) r.add_term(w, QScalar(c.at_one()));
  return r;
}

std::string NCPoly::str(const Alphabet& a, const std::string& letter) const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (auto s : w) os << "*" << a.symbol_name(s, letter);
  }
  return os.str();
}

namespace {

std::vector<SparseRow> relation_rows(const Alphabet& a, const std::vector<NCPoly>& rels,
                                     int d, const DegreeBasis& basis);

std::vector<NCPoly> independent_relations(const Alphabet& a, std::vector<NCPoly> rels) {
  // group by degree, row-reduce, keep reduced representatives
  std::map<int, std::vector<NCPoly>> by_deg;
  for (auto& r : rels) {
    if (r.is_zero()) continue;
    int d = r.degree();
    if (d < 0) throw std::runtime_error("RelationSet: inhomogeneous relation");
    by_deg[d].push_back(std::move(r));
  }
  std::vector<NCPoly> out;
  for (auto& [d, list] : by_deg) {
    DegreeBasis basis = degree_basis(a, d);
    std::vector<SparseRow> rows;
    for (auto& p : list) {
      SparseRow row;
      for (auto& [w, c] : p.t) row.e.emplace_back(basis.index.at(w), c);
      std::sort(row.e.begin(), row.e.end(),
                [](auto& x, auto& y) { return x.first < y.first; });
      rows.push_back(std::move(row));
    }
    RrefResult r = sparse_rref(std::move(rows), int(basis.words.size()));
    for (auto& row : r.rows) {
      NCPoly p;
      for (auto& [col, v] : row.e) p.add_term(basis.words[col], v);
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

RelationSet::RelationSet(Alphabet a, std::vector<NCPoly> rels) : alph_(a) {
  rels_ = independent_relations(a, std::move(rels));
}

int RelationSet::min_degree() const {
  int m = INT32_MAX;
  for (auto& r : rels_) m = std::min(m, r.degree());
  return m == INT32_MAX ? 0 : m;
}

RelationSet RelationSet::merged(const RelationSet& extra) const {
  std::vector<NCPoly> all = rels_;
  for (auto& r : extra.rels_) all.push_back(r);
  return RelationSet(alph_, std::move(all));
}

DegreeBasis degree_basis(const Alphabet& a, int d) {
  DegreeBasis b;
  int m = a.N * a.N;
  int base = a.has_f ? 1 : 0;
  int kmax = a.has_f ? d : 0;
  for (int k = kmax; k >= 0; --k) {
    int len = d - k;
    // matrix-letter words of length len in lex order
    Word w(d);
    for (int i = 0; i < k; ++i) w[i] = 0;
    std::vector<int> digits(len, 0);
    while (true) {
      for (int i = 0; i < len; ++i) w[k + i] = uint8_t(base + digits[i]);
      b.index.emplace(w, int(b.words.size()));
      b.words.push_back(w);
      int pos = len - 1;
      while (pos >= 0 && digits[pos] == m - 1) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
    }
    if (len == 0 && k == 0) break;
  }
  return b;
}

namespace {

std::vector<Word> matrix_words(const Alphabet& a, int len) {
  std::vector<Word> out;
  int m = a.N * a.N;
  int base = a.has_f ? 1 : 0;
  Word w(len);
  std::vector<int> digits(len, 0);
  while (true) {
    for (int i = 0; i < len; ++i) w[i] = uint8_t(base + digits[i]);
    out.push_back(w);
    int pos = len - 1;
    while (pos >= 0 && digits[pos] == m - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  return out;
}

std::vector<SparseRow> relation_rows(const Alphabet& a, const std::vector<NCPoly>& rels,
                                     int d, const DegreeBasis& basis) {
  std::vector<SparseRow> rows;
  for (auto& rel : rels) {
    int e = rel.degree();
    if (e > d) continue;
    int kmax = a.has_f ? d - e : 0;
    for (int k = 0; k <= kmax; ++k) {
      int rest = d - e - k;
      for (int la = 0; la <= rest; ++la) {
        int lb = rest - la;
        for (auto& u : matrix_words(a, la)) {
          for (auto& v : matrix_words(a, lb)) {
            SparseRow row;
            for (auto& [w, c] : rel.t) {
              Word full;
              full.reserve(size_t(d));
              full.insert(full.end(), size_t(k), uint8_t(0));
              full.insert(full.end(), u.begin(), u.end());
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), v.begin(), v.end());
              full = canonical_word(a, std::move(full));
              int col = basis.index.at(full);
              bool merged = false;
              for (auto& [cc, vv] : row.e)
                if (cc == col) {
                  vv += c;
                  merged = true;
                  break;
                }
              if (!merged) row.e.emplace_back(col, c);
            }
            std::sort(row.e.begin(), row.e.end(),
                      [](auto& x, auto& y) { return x.first < y.first; });
            row.e.erase(std::remove_if(row.e.begin(), row.e.end(),
                                       [](auto& p) { return p.second.is_zero(); }),
                        row.e.end());
            if (!row.empty()) rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

}  // namespace

std::vector<SparseRow> ideal_slice_rows(const RelationSet& rels, int d) {
  DegreeBasis basis = degree_basis(rels.alphabet(), d);
  return relation_rows(rels.alphabet(), rels.relations(), d, basis);
}

RrefResult ideal_slice(const RelationSet& rels, int d) {
  DegreeBasis basis = degree_basis(rels.alphabet(), d);
  auto rows = relation_rows(rels.alphabet(), rels.relations(), d, basis);
  return sparse_rref(std::move(rows), int(basis.words.size()));
}

const SparseVec* DegreeData::reduce_word(int col) const {
  auto it = reduce_map.find(col);
  return it == reduce_map.end() ? nullptr : &it->second;
}

GradedQuotient::GradedQuotient(RelationSet rels, int max_degree)
    : rels_(std::move(rels)), max_degree_(max_degree) {
  per_degree_.resize(max_degree + 1);
  const Alphabet& a = rels_.alphabet();
  RrefResult prev;  // reduced slice one degree down
  for (int d = 0; d <= max_degree; ++d) {
    DegreeData& dd = per_degree_[d];
    dd.basis = degree_basis(a, d);
    int cols = int(dd.basis.words.size());
    // Degree-d slice generated recursively: left letter shifts of the reduced
    // degree-(d-1) slice plus relations placed flush left. This keeps the
    // elimination input near echelon form, which matters a great deal at the
    // larger degrees.
    std::vector<SparseRow> rows;
    if (d > 0) {
      const DegreeBasis& below = per_degree_[d - 1].basis;
      for (int s = 0; s < a.size(); ++s)
        for (auto& src : prev.rows) {
          SparseRow row;
          row.e.reserve(src.e.size());
          for (auto& [col, c] : src.e) {
            Word w;
            w.reserve(size_t(d));
            w.push_back(uint8_t(s));
            const Word& tail = below.words[col];
            w.insert(w.end(), tail.begin(), tail.end());
            row.e.emplace_back(dd.basis.index.at(canonical_word(a, std::move(w))), c);
          }
          std::sort(row.e.begin(), row.e.end(),
                    [](auto& x, auto& y) { return x.first < y.first; });
          rows.push_back(std::move(row));
        }
    }
    for (auto& rel : rels_.relations()) {
      int e = rel.degree();
      if (e > d) continue;
      for (auto& v : matrix_words(a, d - e)) {
        SparseRow row;
        for (auto& [w, c] : rel.t) {
          Word full;
          full.reserve(size_t(d));
          full.insert(full.end(), w.begin(), w.end());
          full.insert(full.end(), v.begin(), v.end());
          int col = dd.basis.index.at(canonical_word(a, std::move(full)));
          bool merged = false;
          for (auto& [cc, vv] : row.e)
            if (cc == col) {
              vv += c;
              merged = true;
              break;
            }
          if (!merged) row.e.emplace_back(col, c);
        }
        std::sort(row.e.begin(), row.e.end(),
                  [](auto& x, auto& y) { return x.first < y.first; });
        row.e.erase(std::remove_if(row.e.begin(), row.e.end(),
                                   [](auto& p) { return p.second.is_zero(); }),
                    row.e.end());
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    RrefResult r = sparse_rref(std::move(rows), cols);
    dd.slice_dim = r.rank();
    dd.pivot_cols = r.pivot_cols;
    dd.complement_cols = r.complement_cols();
    dd.col_to_complement.assign(cols, -1);
    for (size_t i = 0; i < dd.complement_cols.size(); ++i)
      dd.col_to_complement[dd.complement_cols[i]] = int(i);
    for (size_t i = 0; i < r.rows.size(); ++i) {
      const SparseRow& row = r.rows[i];
      const QScalar& piv = row.e.front().second;
      SparseVec expr;
      for (size_t k = 1; k < row.e.size(); ++k)
        expr.emplace_back(row.e[k].first, -(row.e[k].second / piv));
      dd.reduce_map.emplace(r.pivot_cols[i], std::move(expr));
    }
    prev = std::move(r);
  }
}

std::vector<int> GradedQuotient::dims() const {
  std::vector<int> r;
  for (auto& dd : per_degree_) r.push_back(dd.quotient_dim());
  return r;
}

NCPoly GradedQuotient::normal_form(const NCPoly& p) const {
  NCPoly out;
  const Alphabet& a = alphabet();
  for (auto& [w, c] : p.t) {
    int d = int(w.size());
    if (d > max_degree_) throw std::runtime_error("normal_form: degree overflow");
    const DegreeData& dd = per_degree_[d];
    int col = dd.basis.index.at(w);
    if (const SparseVec* expr = dd.reduce_word(col)) {
      for (auto& [cc, vv] : *expr) out.add_term(dd.basis.words[cc], c * vv);
    } else {
      out.add_term(w, c);
    }
  }
  return out;
}

NCPoly GradedQuotient::multiply(const NCPoly& a, const NCPoly& b) const {
  return normal_form(a.concat(b, alphabet()));
}

NCPoly GradedQuotient::from_coords(int d, const SparseVec& coords) const {
  NCPoly p;
  const DegreeData& dd = per_degree_.at(d);
  for (auto& [i, c] : coords) p.add_term(dd.basis.words[dd.complement_cols[i]], c);
  return p;
}

std::vector<NCPoly> centralizer_basis(const GradedQuotient& gq, int d) {
  if (d + 1 > gq.max_degree())
    throw std::runtime_error("centralizer_basis: degree overflow");
  const Alphabet& a = gq.alphabet();
  const DegreeData& dd = gq.degree(d);
  const DegreeData& up = gq.degree(d + 1);
  int n_unknowns = dd.quotient_dim();
  // constraint rows indexed by (generator, target complement word)
  std::vector<SparseRow> rows;
  int n_targets = up.quotient_dim();
  for (int s = 0; s < a.size(); ++s) {
    if (a.is_f(s)) continue;  // f commutes by construction
    // column-major accumulation: commutator of each unknown basis word with s
    std::vector<std::map<int, QScalar>> per_target(n_targets);
    for (int u = 0; u < n_unknowns; ++u) {
      const Word& w = dd.basis.words[dd.complement_cols[u]];
      Word wg = w;
      wg.push_back(uint8_t(s));
      Word gw;
      gw.push_back(uint8_t(s));
      gw.insert(gw.end(), w.begin(), w.end());
      NCPoly comm;
      comm.add_term(canonical_word(a, std::move(wg)), QScalar(1));
      comm.add_term(canonical_word(a, std::move(gw)), QScalar(-1));
      NCPoly nf = gq.normal_form(comm);
      for (auto& [ww, cc] : nf.t) {
        int tcol = up.col_to_complement[up.basis.index.at(ww)];
        auto& m = per_target[tcol];
        auto it = m.find(u);
        if (it == m.end())
          m.emplace(u, cc);
        else {
          it->second += cc;
          if (it->second.is_zero()) m.erase(it);
        }
      }
    }
    for (auto& m : per_target) {
      if (m.empty()) continue;
      SparseRow row;
      for (auto& [u, c] : m) row.e.emplace_back(u, c);
      rows.push_back(std::move(row));
    }
  }
  RrefResult r = sparse_rref(std::move(rows), n_unknowns);
  std::vector<NCPoly> out;
  for (auto& kv : kernel_basis(r)) {
    SparseVec coords(kv.e.begin(), kv.e.end());
    out.push_back(gq.from_coords(d, coords));
  }
  return out;
}

}  // namespace qgw

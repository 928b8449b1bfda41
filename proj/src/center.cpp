#include "qgw/center.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qgw/cpoly.hpp"
#include "qgw/linalg.hpp"

namespace qgw {

namespace {

/// All exponent vectors of total degree d over nv variables, lex order.
void enumerate_monos(int nv, int d, int pos, Mono& cur, std::vector<Mono>& out) {
  if (pos == nv - 1) {
    cur[pos] = d;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = e;
    enumerate_monos(nv, d - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Mono> monomials_of_degree(int nv, int d) {
  std::vector<Mono> out;
  Mono cur(nv, 0);
  enumerate_monos(nv, d, 0, cur, out);
  return out;
}

/// Rank of rational rows given as (column -> value) maps over `cols` columns.
int rat_row_rank(const std::vector<std::map<int, Rat>>& rows, int cols) {
  std::vector<SparseRow> sr;
  for (auto& r : rows) {
    SparseRow row;
    for (auto& [c, v] : r)
      if (v != 0) row.e.emplace_back(c, QScalar(v));
    if (!row.empty()) sr.push_back(std::move(row));
  }
  return sparse_rref(std::move(sr), cols).rank();
}

/// Degree-d matrix of a linear substitution x_v -> images[v], minus the
/// identity, as rational rows over the monomial basis.
std::vector<std::map<int, Rat>> substitution_minus_id(const std::vector<CPoly>& images,
                                                      const std::vector<Mono>& monos,
                                                      const std::map<Mono, int>& index) {
  int nv = int(images.front().nvars);
  std::vector<std::map<int, Rat>> rows(monos.size());
  for (size_t s = 0; s < monos.size(); ++s) {
    CPoly img = CPoly::constant(nv, Rat(1));
    for (int v = 0; v < nv; ++v)
      for (int k = 0; k < monos[s][v]; ++k) img = img * images[v];
    std::map<int, Rat> row;
    for (auto& [m, c] : img.t) row[index.at(m)] += c;
    row[int(s)] -= 1;
    for (auto it = row.begin(); it != row.end();)
      it = it->second == 0 ? row.erase(it) : std::next(it);
    rows[s] = std::move(row);
  }
  return rows;
}

}  // namespace

InvariantDims classical_invariant_dims(int N, int d_max) {
  int nv = N * N;
  InvariantDims out;
  out.routes_agree = true;
  // rational conjugators generating a dense enough subgroup at desk degrees
  std::vector<std::vector<std::vector<Rat>>> gs;
  for (int which = 0; which < 3; ++which) {
    std::vector<std::vector<Rat>> g(N, std::vector<Rat>(N, Rat(0)));
    for (int i = 0; i < N; ++i) g[i][i] = which == 2 ? Rat(i + 1) : Rat(1);
    if (which == 0) g[0][N - 1] += 1;
    if (which == 1) g[N - 1][0] += 1;
    if (which == 0 && N > 2) g[1][0] += 1;
    gs.push_back(std::move(g));
  }
  for (int d = 0; d <= d_max; ++d) {
    std::vector<Mono> monos = monomials_of_degree(nv, d);
    std::map<Mono, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], int(i));
    int md = int(monos.size());

    // route one: joint kernel of the adjoint derivations x -> [e_ab, x]
    std::vector<std::map<int, Rat>> rows;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        // D(x^i_j) = delta_{ia} x^b_j - delta_{jb} x^i_a, Leibniz-extended
        std::vector<std::map<int, Rat>> block(md);
        for (int s = 0; s < md; ++s) {
          const Mono& m = monos[s];
          for (int v = 0; v < nv; ++v) {
            if (m[v] == 0) continue;
            int i = v / N, j = v % N;
            auto push = [&](int w, const Rat& c) {
              Mono tgt(m);
              tgt[v] -= 1;
              tgt[w] += 1;
              block[s][index.at(tgt)] += Rat(m[v]) * c;
            };
            if (i == a) push(b * N + j, Rat(1));
            if (j == b) push(i * N + a, Rat(-1));
          }
        }
        // kernel is over the source coordinates: transpose the block
        std::vector<std::map<int, Rat>> tr(md);
        for (int s = 0; s < md; ++s)
          for (auto& [t, c] : block[s])
            if (c != 0) tr[t][s] = c;
        for (auto& r : tr)
          if (!r.empty()) rows.push_back(std::move(r));
      }
    int dim_derivation = md - rat_row_rank(rows, md);

    // route two: fixed space of conjugation by the sampled group points
    std::vector<std::map<int, Rat>> fixed_rows;
    for (auto& g : gs) {
      QMatrix gm(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) gm.at(i, j) = QScalar(g[i][j]);
      QMatrix gi = gm.inverse();
      std::vector<CPoly> images(nv, CPoly(nv));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          CPoly img(nv);
          for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
              img = img +
                    CPoly::variable(nv, a * N + b).scaled(g[i][a] * gi.at(b, j).at_one());
          images[i * N + j] = std::move(img);
        }
      // transpose so the kernel ranges over source monomials
      auto sub = substitution_minus_id(images, monos, index);
      std::vector<std::map<int, Rat>> tr(md);
      for (int s = 0; s < md; ++s)
        for (auto& [t, c] : sub[s])
          if (c != 0) tr[t][s] = c;
      for (auto& r : tr)
        if (!r.empty()) fixed_rows.push_back(std::move(r));
    }
    int dim_fixed = md - rat_row_rank(fixed_rows, md);

    if (dim_derivation != dim_fixed) out.routes_agree = false;
    out.dims.push_back(dim_derivation);
  }
  return out;
}

namespace {

SparseRow coords_of(const GradedQuotient& gq, int d, const NCPoly& p) {
  const DegreeData& dd = gq.degree(d);
  SparseRow row;
  std::map<int, QScalar> acc;
  for (auto& [w, c] : p.t) {
    int col = dd.basis.index.at(w);
    int pos = dd.col_to_complement[col];
    if (pos < 0) throw std::logic_error("coords_of: non-normal-form word");
    acc[pos] += c;
  }
  for (auto& [pos, c] : acc)
    if (!c.is_zero()) row.e.emplace_back(pos, c);
  return row;
}

}  // namespace

CenterReport center_report(const GradedQuotient& gq, int d_max) {
  if (d_max + 1 > gq.max_degree())
    throw std::invalid_argument("center_report: quotient depth must exceed d_max");
  const Alphabet& al = gq.alphabet();
  if (al.has_f) throw std::invalid_argument("center_report: free matrix model expected");
  CenterReport rep;
  std::vector<std::vector<NCPoly>> bases;
  for (int d = 0; d <= d_max; ++d) {
    bases.push_back(centralizer_basis(gq, d));
    rep.quantum_dims.push_back(int(bases.back().size()));
  }
  InvariantDims inv = classical_invariant_dims(al.N, d_max);
  rep.classical_dims = inv.dims;
  rep.routes_agree = inv.routes_agree;
  bool all_match = true;
  for (int d = 0; d <= d_max; ++d) {
    rep.match.push_back(rep.quantum_dims[d] == rep.classical_dims[d]);
    all_match = all_match && rep.match.back();
  }
  rep.bases_commute = true;
  for (int d1 = 0; d1 <= d_max; ++d1)
    for (int d2 = d1; d2 <= d_max && d1 + d2 <= gq.max_degree(); ++d2)
      for (auto& z1 : bases[d1])
        for (auto& z2 : bases[d2])
          if (!(gq.multiply(z1, z2) - gq.multiply(z2, z1)).is_zero())
            rep.bases_commute = false;
  rep.pass = all_match && rep.bases_commute && rep.routes_agree;
  return rep;
}

NCPoly quantum_trace(const GradedQuotient& gq) {
  std::vector<NCPoly> cb = centralizer_basis(gq, 1);
  if (cb.size() != 1)
    throw std::logic_error("quantum_trace: degree-1 centralizer is not one-dimensional");
  NCPoly z = cb[0];
  Rat lambda(0);
  for (auto& [w, c] : z.t) {
    if (w.size() != 1) throw std::logic_error("quantum_trace: non-linear centralizer element");
    Rat v = c.at_one();
    if (lambda == 0)
      lambda = v;
    else if (v != lambda)
      throw std::logic_error("quantum_trace: q = 1 limit is not a multiple of the trace");
  }
  const Alphabet& al = gq.alphabet();
  for (int i = 0; i < al.N; ++i)
    if (z.t.find(Word{uint8_t(al.t_symbol(i, i))}) == z.t.end())
      throw std::logic_error("quantum_trace: missing diagonal coordinate");
  if (lambda == 0) throw std::logic_error("quantum_trace: degenerate q = 1 limit");
  return z.scaled(QScalar(Rat(1) / lambda));
}

FreenessReport freeness_report(const GradedQuotient& gq,
                               const std::vector<NCPoly>& center_gens, int d_max) {
  FreenessReport rep;
  int ng = int(center_gens.size());
  std::vector<int> gdeg(ng);
  for (int i = 0; i < ng; ++i) {
    gdeg[i] = center_gens[i].degree();
    if (gdeg[i] < 1) throw std::invalid_argument("freeness_report: generators must be graded");
  }
  // the module claim is over the center: every generator must commute with
  // the whole algebra, which at graded level reduces to the degree-1 letters
  rep.generators_central = true;
  for (const auto& g : center_gens) {
    if (g.degree() + 1 <= gq.max_degree()) {
      const Alphabet& a = gq.alphabet();
      int nl = (a.has_f ? 1 : 0) + a.N * a.N;
      for (int s = 0; s < nl; ++s) {
        NCPoly x;
        x.add_term(Word{uint8_t(s)}, QScalar(1));
        if (!gq.multiply(g, x).operator-(gq.multiply(x, g)).is_zero())
          rep.generators_central = false;
      }
    }
  }

  // normal forms of all center monomials up to degree d_max, by exponent
  std::map<std::vector<int>, NCPoly> center_monos;
  {
    NCPoly one;
    one.add_term(Word{}, QScalar(1));
    center_monos.emplace(std::vector<int>(ng, 0), one);
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto& [e, p] : std::map<std::vector<int>, NCPoly>(center_monos)) {
        int deg = 0;
        for (int i = 0; i < ng; ++i) deg += e[i] * gdeg[i];
        for (int i = 0; i < ng; ++i) {
          if (deg + gdeg[i] > d_max) continue;
          std::vector<int> e2(e);
          e2[i] += 1;
          if (center_monos.count(e2)) continue;
          center_monos.emplace(e2, gq.multiply(p, center_gens[i]));
          grew = true;
        }
      }
    }
  }
  auto mono_degree = [&](const std::vector<int>& e) {
    int d = 0;
    for (int i = 0; i < ng; ++i) d += e[i] * gdeg[i];
    return d;
  };

  std::vector<std::vector<NCPoly>> e_basis;  // E_d elements per degree
  bool all_ok = true;
  for (int d = 0; d <= d_max; ++d) {
    int dim_a = gq.degree(d).quotient_dim();
    rep.algebra_dims.push_back(dim_a);

    std::vector<SparseRow> i_rows;
    for (auto& [e, p] : center_monos)
      if (mono_degree(e) == d) i_rows.push_back(coords_of(gq, d, p));
    rep.center_dims.push_back(sparse_rref(i_rows, dim_a).rank());

    // columns of the multiplication map with a positive-degree center factor
    std::vector<SparseRow> pos_cols;
    int col_count = 0;
    for (auto& [e, p] : center_monos) {
      int i = mono_degree(e);
      if (i < 1 || i > d) continue;
      for (auto& el : e_basis[d - i]) {
        pos_cols.push_back(coords_of(gq, d, gq.multiply(p, el)));
        ++col_count;
      }
    }
    RrefResult span = sparse_rref(pos_cols, dim_a);

    // E_d: lexicographically first complement of the positive-degree image
    std::vector<NCPoly> ed;
    if (d == 0) {
      NCPoly one;
      one.add_term(Word{}, QScalar(1));
      ed.push_back(one);
    } else {
      for (int pos : span.complement_cols()) ed.push_back(gq.from_coords(d, {{pos, QScalar(1)}}));
    }
    rep.complement_dims.push_back(int(ed.size()));

    // bijectivity: all columns (center-degree zero included) independent and
    // spanning
    std::vector<SparseRow> all_cols = std::move(pos_cols);
    for (auto& el : ed) all_cols.push_back(coords_of(gq, d, el));
    col_count += int(ed.size());
    int rank = sparse_rref(std::move(all_cols), dim_a).rank();
    bool ok = col_count == dim_a && rank == dim_a;
    rep.bijective.push_back(ok);
    all_ok = all_ok && ok;
    e_basis.push_back(std::move(ed));
  }
  rep.pass = all_ok && rep.generators_central;
  return rep;
}

bool transported_center_contained(const RMatrixData& rd, int d_max) {
  AlgebraPresentation frt = build_presentation(rd, AlgKind::FRT, GroupModel::Free);
  AlgebraPresentation re = build_presentation(rd, AlgKind::RE, GroupModel::Free);
  GradedQuotient gq_frt(frt.relations, d_max + 1);
  GradedQuotient gq_re(re.relations, d_max + 1);
  GeneratorCocycle gc(rd);
  for (int d = 1; d <= d_max; ++d) {
    std::vector<SparseRow> re_rows;
    for (auto& z : centralizer_basis(gq_re, d))
      re_rows.push_back(coords_of(gq_re, d, z));
    RrefResult re_span = sparse_rref(std::move(re_rows), gq_re.degree(d).quotient_dim());
    for (auto& z : centralizer_basis(gq_frt, d)) {
      NCPoly moved = gq_re.normal_form(gc.transport(z, frt.alphabet));
      if (moved.is_zero()) continue;
      if (!re_span.contains(coords_of(gq_re, d, moved))) return false;
    }
  }
  return true;
}

}  // namespace qgw

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgw/poisson.hpp"

using namespace qgw;

namespace {

bool tables_agree(const PoissonSpec& spec, const std::vector<CPoly>& closed) {
  if (spec.table.size() != closed.size()) return false;
  for (size_t i = 0; i < closed.size(); ++i)
    if (!(spec.table[i] == closed[i])) return false;
  return true;
}

bool antisymmetric(const PoissonSpec& spec) {
  int nv = spec.N * spec.N;
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b)
      if (!(spec.entry(a, b) + spec.entry(b, a)).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("termwise and closed-form bracket tables coincide") {
  for (auto id : {make_series(Series::A, 1), make_series(Series::A, 2),
                  make_series(Series::B, 1), make_series(Series::C, 1)}) {
    RMatrixData rd = build_R(id);
    CHECK(tables_agree(ds_bracket_table(rd), ds_bracket_closed_form(rd)));
    CHECK(tables_agree(sts_bracket_table(rd), sts_bracket_closed_form(rd)));
  }
}

TEST_CASE("sl(2) and sl(3) brackets are antisymmetric and satisfy Jacobi symbolically") {
  for (auto id : {make_series(Series::A, 1), make_series(Series::A, 2)}) {
    RMatrixData rd = build_R(id);
    for (auto spec : {ds_bracket_table(rd), sts_bracket_table(rd)}) {
      CHECK(antisymmetric(spec));
      VarietyReport rep = jacobi_check_on_variety(spec, rd, 0, 1);
      CHECK(rep.symbolic);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("bracket of coordinate functions follows the table") {
  RMatrixData rd = build_R(make_series(Series::A, 1));
  PoissonSpec spec = ds_bracket_table(rd);
  int nv = 4;
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b) {
      CPoly xa = CPoly::variable(nv, a), xb = CPoly::variable(nv, b);
      CHECK(poisson_bracket(spec, xa, xb) == spec.entry(a, b));
    }
  // Leibniz rule on a product
  CPoly x0 = CPoly::variable(nv, 0), x1 = CPoly::variable(nv, 1),
        x2 = CPoly::variable(nv, 2);
  CHECK(poisson_bracket(spec, x0 * x1, x2) ==
        poisson_bracket(spec, x0, x2) * x1 + x0 * poisson_bracket(spec, x1, x2));
}

TEST_CASE("exact variety points certify Jacobi for the metric series") {
  for (auto id : {make_series(Series::B, 1), make_series(Series::C, 1)}) {
    RMatrixData rd = build_R(id);
    PoissonSpec spec = sts_bracket_table(rd);
    VarietyReport rep = jacobi_check_on_variety(spec, rd, 20, 1);
    CHECK(rep.points_checked >= 20);
    CHECK(rep.on_variety);
    CHECK(rep.pass);
  }
}

TEST_CASE("so(3) negative control: jacobiator is nonzero off the variety") {
  RMatrixData rd = build_R(make_series(Series::B, 1));
  VarietyReport rep = jacobi_check_on_variety(sts_bracket_table(rd), rd, 20, 1);
  CHECK(rep.off_variety_nonzero);
}

TEST_CASE("Cayley points satisfy the metric relation exactly") {
  for (auto id : {make_series(Series::B, 1), make_series(Series::C, 1)}) {
    RMatrixData rd = build_R(id);
    int N = rd.N();
    QMatrix b0 = classical_B0(id);
    auto points = cayley_points(rd, 5, 42);
    REQUIRE(int(points.size()) == 5);
    for (const auto& pt : points) {
      std::vector<std::vector<Rat>> x(N, std::vector<Rat>(N));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) x[i][j] = pt[i * N + j];
      std::vector<std::vector<Rat>> b(N, std::vector<Rat>(N));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) b[i][j] = b0.at(i, j).at_one();
      // t = X^t B0 X
      std::vector<std::vector<Rat>> t(N, std::vector<Rat>(N));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          Rat acc = 0;
          for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) acc += x[k][i] * b[k][l] * x[l][j];
          t[i][j] = acc;
        }
      // X^t B0 X must be an exact nonzero multiple of B0
      Rat scale = 0;
      bool prop = true;
      for (int i = 0; i < N && prop; ++i)
        for (int j = 0; j < N && prop; ++j) {
          if (b[i][j] == 0) {
            if (t[i][j] != 0) prop = false;
          } else {
            Rat s = t[i][j] / b[i][j];
            if (scale == 0)
              scale = s;
            else if (s != scale)
              prop = false;
          }
        }
      CHECK(prop);
      CHECK(scale != 0);
    }
  }
}

TEST_CASE("semiclassical constant is 2 across presentations and series") {
  for (auto id : {make_series(Series::A, 1), make_series(Series::A, 2)}) {
    RMatrixData rd = build_R(id);
    for (AlgKind kind : {AlgKind::FRT, AlgKind::RE}) {
      AlgebraPresentation p = build_presentation(rd, kind, GroupModel::Free);
      PoissonSpec spec =
          kind == AlgKind::RE ? sts_bracket_table(rd) : ds_bracket_table(rd);
      SemiclassicalReport rep = semiclassical_compare(p, spec);
      CHECK(rep.pass);
      CHECK(rep.c == 2);
      CHECK(rep.pairs_checked == rd.N() * rd.N() * rd.N() * rd.N());
    }
  }
}

TEST_CASE("semiclassical comparison also holds on the metric series") {
  for (auto id : {make_series(Series::B, 1), make_series(Series::C, 1)}) {
    RMatrixData rd = build_R(id);
    for (AlgKind kind : {AlgKind::FRT, AlgKind::RE}) {
      AlgebraPresentation p = build_presentation(rd, kind, GroupModel::Free);
      PoissonSpec spec =
          kind == AlgKind::RE ? sts_bracket_table(rd) : ds_bracket_table(rd);
      SemiclassicalReport rep = semiclassical_compare(p, spec);
      CHECK(rep.pass);
      CHECK(rep.c == 2);
    }
  }
}

TEST_CASE("mismatched pairing fails the semiclassical comparison") {
  RMatrixData rd = build_R(make_series(Series::A, 1));
  // FRT commutators against the STS table: no single constant works
  AlgebraPresentation p = build_presentation(rd, AlgKind::FRT, GroupModel::Free);
  SemiclassicalReport rep = semiclassical_compare(p, sts_bracket_table(rd));
  CHECK_FALSE(rep.pass);
}

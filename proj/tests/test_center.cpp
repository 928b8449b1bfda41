#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgw/center.hpp"

using namespace qgw;

namespace {

NCPoly lift_to_f_alphabet(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.t) {
    Word w2(w);
    for (auto& l : w2) l = uint8_t(l + 1);
    out.add_term(w2, c);
  }
  return out;
}

}  // namespace

TEST_CASE("classical invariant dimensions: two routes agree") {
  InvariantDims inv = classical_invariant_dims(2, 4);
  CHECK(inv.routes_agree);
  CHECK(inv.dims == std::vector<int>{1, 1, 2, 2, 3});
  InvariantDims inv3 = classical_invariant_dims(3, 2);
  CHECK(inv3.routes_agree);
  CHECK(inv3.dims == std::vector<int>{1, 1, 2});
}

TEST_CASE("sl(2) reflection-equation center matches the invariant oracle") {
  RMatrixData rd = build_R(make_series(Series::A, 1));
  AlgebraPresentation re = build_presentation(rd, AlgKind::RE, GroupModel::Free);
  GradedQuotient gq(re.relations, 5);
  CenterReport rep = center_report(gq, 4);
  CHECK(rep.quantum_dims == std::vector<int>{1, 1, 2, 2, 3});
  CHECK(rep.classical_dims == std::vector<int>{1, 1, 2, 2, 3});
  CHECK(rep.routes_agree);
  CHECK(rep.bases_commute);
  CHECK(rep.pass);
}

TEST_CASE("degree-1 center of the sl(2) FRT algebra is trivial") {
  RMatrixData rd = build_R(make_series(Series::A, 1));
  AlgebraPresentation frt = build_presentation(rd, AlgKind::FRT, GroupModel::Free);
  GradedQuotient gq(frt.relations, 2);
  CHECK(centralizer_basis(gq, 1).empty());
}

TEST_CASE("quantum trace is the degree-1 central element with weighted diagonal") {
  RMatrixData rd = build_R(make_series(Series::A, 1));
  AlgebraPresentation re = build_presentation(rd, AlgKind::RE, GroupModel::Free);
  GradedQuotient gq(re.relations, 2);
  NCPoly qt = quantum_trace(gq);
  Alphabet a{2, false};
  REQUIRE(qt.t.size() == 2);
  CHECK(qt.t.at(Word{uint8_t(a.t_symbol(0, 0))}) == QScalar::q_power(-2));
  CHECK(qt.t.at(Word{uint8_t(a.t_symbol(1, 1))}) == QScalar(1));
}

TEST_CASE("transported FRT center is contained in the reflection-equation center") {
  RMatrixData rd = build_R(make_series(Series::A, 1));
  CHECK(transported_center_contained(rd, 3));
}

TEST_CASE("sharp model is free over its center with odd complement dimensions") {
  RMatrixData rd = build_R(make_series(Series::A, 1));
  AlgebraPresentation sharp = build_presentation(rd, AlgKind::RE, GroupModel::Sharp);
  GradedQuotient gq(sharp.relations, 4);
  AlgebraPresentation refree = build_presentation(rd, AlgKind::RE, GroupModel::Free);
  GradedQuotient gqfree(refree.relations, 2);
  NCPoly qt = lift_to_f_alphabet(quantum_trace(gqfree));
  NCPoly f;
  f.add_term(Word{0}, QScalar(1));
  FreenessReport rep = freeness_report(gq, {qt, f}, 4);
  CHECK(rep.algebra_dims == std::vector<int>{1, 5, 14, 30, 55});
  CHECK(rep.center_dims == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(rep.complement_dims == std::vector<int>{1, 3, 5, 7, 9});
  CHECK(rep.generators_central);
  CHECK(rep.pass);
  // convolution identity at degree 4: sum dim I_i * dim E_{4-i} = dim A_4
  int conv = 0;
  for (int i = 0; i <= 4; ++i) conv += rep.center_dims[i] * rep.complement_dims[4 - i];
  CHECK(conv == 55);
}

TEST_CASE("corrupted center generator fails freeness by degree 3") {
  RMatrixData rd = build_R(make_series(Series::A, 1));
  AlgebraPresentation sharp = build_presentation(rd, AlgKind::RE, GroupModel::Sharp);
  GradedQuotient gq(sharp.relations, 3);
  NCPoly bad;
  bad.add_term(Word{uint8_t(sharp.alphabet.t_symbol(0, 1))}, QScalar(1));
  NCPoly f;
  f.add_term(Word{0}, QScalar(1));
  FreenessReport rep = freeness_report(gq, {bad, f}, 3);
  CHECK_FALSE(rep.generators_central);
  CHECK_FALSE(rep.pass);
  // a duplicated generator also breaks degreewise bijectivity itself
  NCPoly qt;  // trace of the free model, lifted
  {
    AlgebraPresentation refree = build_presentation(rd, AlgKind::RE, GroupModel::Free);
    GradedQuotient gqfree(refree.relations, 2);
    qt = lift_to_f_alphabet(quantum_trace(gqfree));
  }
  FreenessReport dup = freeness_report(gq, {qt, qt}, 3);
  CHECK_FALSE(dup.pass);
  bool all_bij = true;
  for (bool b : dup.bijective) all_bij = all_bij && b;
  CHECK_FALSE(all_bij);
}

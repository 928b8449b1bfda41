#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgw/rmat.hpp"

using namespace qgw;

namespace {

QMatrix shifted(const QMatrix& rhat, const QScalar& s) {
  QMatrix m = rhat;
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) += s;
  return m;
}

}  // namespace

TEST_CASE("series sizes") {
  CHECK(make_series(Series::A, 1).N == 2);
  CHECK(make_series(Series::A, 2).N == 3);
  CHECK(make_series(Series::B, 1).N == 3);
  CHECK(make_series(Series::C, 1).N == 2);
  CHECK(make_series(Series::D, 2).N == 4);
  CHECK(series_from_string("B") == Series::B);
  CHECK_THROWS(series_from_string("E"));
}

TEST_CASE("QYBE holds exactly for all desk-scale R-matrices") {
  for (auto id : {make_series(Series::A, 1), make_series(Series::A, 2),
                  make_series(Series::B, 1), make_series(Series::C, 1)}) {
    RMatrixData rd = build_R(id);
    CHECK(check_qybe(rd.R));
    CHECK((rd.R * rd.R_inv).is_identity());
  }
}

TEST_CASE("classical limit of R is the identity") {
  for (auto id : {make_series(Series::A, 1), make_series(Series::B, 1),
                  make_series(Series::C, 1)}) {
    RMatrixData rd = build_R(id);
    CHECK(rd.R.evaluate_at(Rat(1)) == QMatrix::identity(rd.N() * rd.N()));
  }
}

TEST_CASE("derived classical r-matrix satisfies the classical YBE") {
  for (auto id : {make_series(Series::A, 1), make_series(Series::A, 2),
                  make_series(Series::B, 1), make_series(Series::C, 1)}) {
    RMatrixData rd = build_R(id);
    CHECK(check_cybe(rd.r_classical));
    // skew + symmetric decomposition under leg flip
    int N = rd.N();
    QMatrix flip = flip_matrix(N);
    CHECK(flip * rd.r_minus * flip == rd.r_minus * QScalar(-1));
    CHECK(flip * rd.omega_rep * flip == rd.omega_rep);
    CHECK(rd.r_minus + rd.omega_rep == rd.r_classical);
  }
}

TEST_CASE("Hecke identity for the A series") {
  for (int rank : {1, 2}) {
    RMatrixData rd = build_R(make_series(Series::A, rank));
    QMatrix rhat = flip_matrix(rd.N()) * rd.R;
    // (Rhat - q)(Rhat + q^-1) = 0
    CHECK((shifted(rhat, -QScalar::q_power(1)) * shifted(rhat, QScalar::q_power(-1)))
              .is_zero());
  }
}

TEST_CASE("metric form of the orthogonal and symplectic series") {
  for (auto id : {make_series(Series::B, 1), make_series(Series::C, 1)}) {
    RMatrixData rd = build_R(id);
    REQUIRE(rd.B_form.rows() == rd.N());
    // q = 1 limit is the classical antidiagonal form
    CHECK(rd.B_form.evaluate_at(Rat(1)) == classical_B0(id));
  }
  CHECK(build_R(make_series(Series::A, 1)).B_form.rows() == 0);
  CHECK_THROWS(build_B(make_series(Series::A, 1)));
}

TEST_CASE("negative controls: perturbed matrices fail the checks") {
  RMatrixData rd = build_R(make_series(Series::A, 1));
  QMatrix bad = rd.R;
  bad.at(0, 0) += QScalar::q_power(2);
  CHECK_FALSE(check_qybe(bad));
  QMatrix badr = rd.r_classical;
  badr.at(1, 2) += QScalar(1);
  CHECK_FALSE(check_cybe(badr));
}

// Integration gate: one line per acceptance criterion, nonzero exit when any
// criterion fails.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgw/center.hpp"
#include "qgw/poisson.hpp"
#include "qgw/qfun.hpp"
#include "qgw/rmat.hpp"
#include "qgw/twist.hpp"

using namespace qgw;

namespace {

int failures = 0;

void line(int n, const char* what, bool ok) {
  std::cout << "criterion " << n << " (" << what << "): "
            << (ok ? "PASS" : "FAIL") << std::endl;
  if (!ok) ++failures;
}

NCPoly lift_to_f_alphabet(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.t) {
    Word w2(w);
    for (auto& l : w2) l = uint8_t(l + 1);
    out.add_term(w2, c);
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int main() {
  std::vector<SeriesId> gate_ids = {make_series(Series::A, 1), make_series(Series::A, 2),
                                    make_series(Series::B, 1), make_series(Series::C, 1)};

  // 1: R-matrix gate
  {
    bool ok = true;
    for (auto id : gate_ids) {
      RMatrixData rd = build_R(id);
      ok = ok && check_qybe(rd.R);
      ok = ok && rd.R.evaluate_at(Rat(1)) == QMatrix::identity(rd.N() * rd.N());
      ok = ok && check_cybe(rd.r_classical);
      if (id.series == Series::A) {
        QMatrix rhat = flip_matrix(rd.N()) * rd.R;
        QMatrix f1 = rhat, f2 = rhat;
        for (int i = 0; i < rhat.rows(); ++i) {
          f1.at(i, i) -= QScalar::q_power(1);
          f2.at(i, i) += QScalar::q_power(-1);
        }
        ok = ok && (f1 * f2).is_zero();
      }
    }
    line(1, "R-matrix identities", ok);
  }

  // 2: flatness of the free matrix quotients
  {
    bool ok = true;
    RMatrixData rd2 = build_R(make_series(Series::A, 1));
    RMatrixData rd3 = build_R(make_series(Series::A, 2));
    for (AlgKind kind : {AlgKind::FRT, AlgKind::RE}) {
      FlatnessReport f2 =
          flatness_check(build_presentation(rd2, kind, GroupModel::Free), 4);
      ok = ok && f2.pass && f2.quantum_dims == std::vector<int>{1, 4, 10, 20, 35};
      FlatnessReport f3 =
          flatness_check(build_presentation(rd3, kind, GroupModel::Free), 2);
      ok = ok && f3.pass && f3.quantum_dims == std::vector<int>{1, 9, 45};
    }
    line(2, "free-model flatness dimensions", ok);
  }

  // 3: group models
  {
    bool ok = true;
    RMatrixData rd2 = build_R(make_series(Series::A, 1));
    for (AlgKind kind : {AlgKind::FRT, AlgKind::RE}) {
      FlatnessReport fr =
          flatness_check(build_presentation(rd2, kind, GroupModel::Sharp), 4);
      ok = ok && fr.pass && fr.quantum_dims == std::vector<int>{1, 5, 14, 30, 55};
    }
    for (auto id : {make_series(Series::B, 1), make_series(Series::C, 1)}) {
      RMatrixData rd = build_R(id);
      for (AlgKind kind : {AlgKind::FRT, AlgKind::RE}) {
        // the metric relations alone (no determinant-type relation) already
        // match the classical oracle
        FlatnessReport fr =
            flatness_check(build_presentation(rd, kind, GroupModel::Sharp), 3);
        ok = ok && fr.pass && fr.quantum_dims == fr.classical_dims;
      }
    }
    line(3, "sharp group-model dimensions", ok);
  }

  // 4: twist correspondence
  {
    bool ok = true;
    for (auto id : {make_series(Series::A, 1), make_series(Series::A, 2),
                    make_series(Series::B, 1)}) {
      TwistReport rep = verify_twist_correspondence(build_R(id));
      ok = ok && rep.quadratic_match && rep.partition_independent && rep.sharp_match &&
           rep.pass;
    }
    line(4, "twist transport of relation spans", ok);
  }

  // 5: Poisson brackets satisfy Jacobi on the right locus
  {
    bool ok = true;
    for (auto id : {make_series(Series::A, 1), make_series(Series::A, 2)}) {
      RMatrixData rd = build_R(id);
      for (auto spec : {ds_bracket_table(rd), sts_bracket_table(rd)}) {
        VarietyReport rep = jacobi_check_on_variety(spec, rd, 0, 1);
        ok = ok && rep.symbolic && rep.pass;
      }
    }
    RMatrixData rdb = build_R(make_series(Series::B, 1));
    VarietyReport vb = jacobi_check_on_variety(sts_bracket_table(rdb), rdb, 20, 1);
    ok = ok && vb.points_checked >= 20 && vb.on_variety && vb.off_variety_nonzero &&
         vb.pass;
    RMatrixData rdc = build_R(make_series(Series::C, 1));
    VarietyReport vc = jacobi_check_on_variety(sts_bracket_table(rdc), rdc, 20, 1);
    ok = ok && vc.points_checked >= 20 && vc.on_variety && vc.pass;
    line(5, "Jacobi identity on the group varieties", ok);
  }

  // 6: semiclassical constant
  {
    bool ok = true;
    Rat c_seen = 0;
    for (auto id : {make_series(Series::A, 1), make_series(Series::A, 2)}) {
      RMatrixData rd = build_R(id);
      for (AlgKind kind : {AlgKind::FRT, AlgKind::RE}) {
        AlgebraPresentation p = build_presentation(rd, kind, GroupModel::Free);
        PoissonSpec spec =
            kind == AlgKind::RE ? sts_bracket_table(rd) : ds_bracket_table(rd);
        SemiclassicalReport rep = semiclassical_compare(p, spec);
        ok = ok && rep.pass && rep.c_found;
        if (c_seen == 0)
          c_seen = rep.c;
        else
          ok = ok && rep.c == c_seen;
      }
    }
    line(6, "single semiclassical constant", ok);
  }

  // 7: center dimensions and transport
  {
    RMatrixData rd = build_R(make_series(Series::A, 1));
    AlgebraPresentation re = build_presentation(rd, AlgKind::RE, GroupModel::Free);
    GradedQuotient gq(re.relations, 5);
    CenterReport rep = center_report(gq, 4);
    bool ok = rep.pass && rep.quantum_dims == std::vector<int>{1, 1, 2, 2, 3} &&
              rep.bases_commute;
    AlgebraPresentation frt = build_presentation(rd, AlgKind::FRT, GroupModel::Free);
    GradedQuotient gqf(frt.relations, 2);
    ok = ok && centralizer_basis(gqf, 1).empty();
    ok = ok && transported_center_contained(rd, 3);
    line(7, "center matches the classical invariants", ok);
  }

  // 8: freeness over the center
  {
    RMatrixData rd = build_R(make_series(Series::A, 1));
    AlgebraPresentation sharp = build_presentation(rd, AlgKind::RE, GroupModel::Sharp);
    GradedQuotient gq(sharp.relations, 4);
    AlgebraPresentation refree = build_presentation(rd, AlgKind::RE, GroupModel::Free);
    GradedQuotient gqfree(refree.relations, 2);
    NCPoly qt = lift_to_f_alphabet(quantum_trace(gqfree));
    NCPoly f;
    f.add_term(Word{0}, QScalar(1));
    FreenessReport rep = freeness_report(gq, {qt, f}, 4);
    bool ok = rep.pass && rep.complement_dims == std::vector<int>{1, 3, 5, 7, 9};
    int conv = 0;
    for (int i = 0; i <= 4; ++i) conv += rep.center_dims[i] * rep.complement_dims[4 - i];
    ok = ok && conv == 55;
    NCPoly bad;
    bad.add_term(Word{uint8_t(sharp.alphabet.t_symbol(0, 1))}, QScalar(1));
    GradedQuotient gq3(sharp.relations, 3);
    FreenessReport neg = freeness_report(gq3, {bad, f}, 3);
    ok = ok && !neg.pass;
    line(8, "freeness over the center with negative control", ok);
  }

  // 9: deterministic reports
  {
    std::string o1 = "acceptance_rep1.json", o2 = "acceptance_rep2.json";
    std::string base = std::string(QGW_CLI_PATH) + " report --series A --rank 1 --out ";
    int s1 = std::system((base + o1 + " >/dev/null 2>&1").c_str());
    int s2 = std::system((base + o2 + " >/dev/null 2>&1").c_str());
    bool ok = WIFEXITED(s1) && WEXITSTATUS(s1) == 0 && WIFEXITED(s2) &&
              WEXITSTATUS(s2) == 0;
    std::string b1 = slurp(o1), b2 = slurp(o2);
    ok = ok && !b1.empty() && b1 == b2;
    std::remove(o1.c_str());
    std::remove(o2.c_str());
    line(9, "byte-identical reports", ok);
  }

  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria pass" << std::endl;
  return 0;
}

#include "qgw/rmat.hpp"

#include <vector>

namespace qgw {

Series series_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Series::A;
  if (s == "B" || s == "b") return Series::B;
  if (s == "C" || s == "c") return Series::C;
  if (s == "D" || s == "d") return Series::D;
  throw std::runtime_error("unknown series: " + s);
}

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    default: return "D";
  }
}

SeriesId make_series(Series s, int rank) {
  if (rank < 1) throw std::runtime_error("rank must be positive");
  int N = 0;
  switch (s) {
    case Series::A: N = rank + 1; break;
    case Series::B: N = 2 * rank + 1; break;
    case Series::C: N = 2 * rank; break;
    case Series::D:
      if (rank < 2) throw std::runtime_error("D series needs rank >= 2");
      N = 2 * rank;
      break;
  }
  return SeriesId{s, rank, N};
}

QMatrix flip_matrix(int N) {
  QMatrix P(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) P.at(i * N + j, j * N + i) = QScalar(1);
  return P;
}

QMatrix leg12(const QMatrix& M, int N) { return M.kron(QMatrix::identity(N)); }
QMatrix leg23(const QMatrix& M, int N) { return QMatrix::identity(N).kron(M); }

QMatrix leg13(const QMatrix& M, int N) {
  QMatrix R(N * N * N, N * N * N);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k)
      for (int ip = 0; ip < N; ++ip)
        for (int kp = 0; kp < N; ++kp) {
          const QScalar& v = M.at(i * N + k, ip * N + kp);
          if (v.is_zero()) continue;
          for (int j = 0; j < N; ++j)
            R.at((i * N + j) * N + k, (ip * N + j) * N + kp) = v;
        }
  return R;
}

bool check_qybe(const QMatrix& R) {
  int n2 = R.rows();
  if (n2 != R.cols()) throw std::runtime_error("check_qybe: non-square");
  int N = 0;
  while (N * N < n2) ++N;
  if (N * N != n2) throw std::runtime_error("check_qybe: size not a perfect square");
  QMatrix R12 = leg12(R, N), R13 = leg13(R, N), R23 = leg23(R, N);
  return (R12 * R13) * R23 == (R23 * R13) * R12;
}

bool check_cybe(const QMatrix& r) {
  int n2 = r.rows();
  if (n2 != r.cols()) throw std::runtime_error("check_cybe: non-square");
  int N = 0;
  while (N * N < n2) ++N;
  if (N * N != n2) throw std::runtime_error("check_cybe: size not a perfect square");
  QMatrix r12 = leg12(r, N), r13 = leg13(r, N), r23 = leg23(r, N);
  auto comm = [](const QMatrix& a, const QMatrix& b) { return a * b - b * a; };
  return (comm(r12, r13) + comm(r12, r23) + comm(r13, r23)).is_zero();
}

namespace {

// epsilon signs and (integer-shifted) rho exponents of the FRT conventions;
// the B-series rho is shifted by 1/2 off the middle index, which amounts to
// a diagonal change of basis and keeps all exponents integral.
void series_data(const SeriesId& id, std::vector<int>& rho, std::vector<int>& eps) {
  int N = id.N, n = id.rank;
  rho.assign(N, 0);
  eps.assign(N, 1);
  switch (id.series) {
    case Series::A:
      break;
    case Series::B:
      for (int i = 0; i < n; ++i) {
        rho[i] = n - i;
        rho[N - 1 - i] = -(n - 1 - i);
      }
      rho[n] = 0;
      break;
    case Series::C:
      for (int i = 0; i < n; ++i) {
        rho[i] = n - i;
        rho[N - 1 - i] = -(n - i);
        eps[N - 1 - i] = -1;
      }
      break;
    case Series::D:
      for (int i = 0; i < n; ++i) {
        rho[i] = n - 1 - i;
        rho[N - 1 - i] = -(n - 1 - i);
      }
      break;
  }
}

QMatrix raw_R(const SeriesId& id) {
  int N = id.N;
  QMatrix R(N * N, N * N);
  QScalar q = QScalar::q_power(1), qi = QScalar::q_power(-1);
  QScalar t = q - qi;  // q - q^{-1}
  if (id.series == Series::A) {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        R.at(i * N + j, i * N + j) = (i == j) ? q : QScalar(1);
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        R.at(i * N + j, j * N + i) = t;  // e_ij ⊗ e_ji, i < j
    return R;
  }
  std::vector<int> rho, eps;
  series_data(id, rho, eps);
  auto conj = [N](int i) { return N - 1 - i; };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int e = (i == j ? 1 : 0) - (j == conj(i) ? 1 : 0);
      R.at(i * N + j, i * N + j) = QScalar::q_power(e);
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i <= j) continue;  // i > j
      // (q - q^{-1}) e_ij ⊗ e_ji
      R.at(i * N + j, j * N + i) += t;
      // -(q - q^{-1}) eps_i eps_j q^{rho_i - rho_j} e_ij ⊗ e_{i'j'}
      QScalar c = t * QScalar::q_power(rho[i] - rho[j], Rat(-eps[i] * eps[j]));
      R.at(i * N + conj(i), j * N + conj(j)) += c;
    }
  return R;
}

}  // namespace

QMatrix classical_B0(SeriesId id) {
  if (id.series == Series::A) throw std::runtime_error("B form: series A has none");
  int N = id.N;
  QMatrix B(N, N);
  for (int i = 0; i < N; ++i) {
    int s = (id.series == Series::C && i >= id.rank) ? -1 : 1;
    B.at(i, N - 1 - i) = QScalar(s);
  }
  return B;
}

QMatrix build_B(SeriesId id) {
  if (id.series == Series::A) throw std::runtime_error("build_B: series A has none");
  int N = id.N;
  QMatrix R = raw_R(id);
  QMatrix Rhat = flip_matrix(N) * R;
  // the invariant element spans the eigenspace with the distinguished
  // eigenvalue: q^{1-N} (orthogonal) or -q^{-1-N} (symplectic)
  QScalar lambda = (id.series == Series::C)
                       ? QScalar::q_power(-1 - N, Rat(-1))
                       : QScalar::q_power(1 - N);
  QMatrix M = Rhat - QMatrix::identity(N * N) * lambda;
  DenseRref r = rref(M);
  if (r.kernel_basis.cols() != 1)
    throw std::runtime_error("build_B: distinguished eigenspace is not 1-dimensional");
  QMatrix B(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) B.at(i, j) = r.kernel_basis.at(i * N + j, 0);
  // scale so the (1, N) entry is exactly 1, then check the classical limit
  QScalar top = B.at(0, N - 1);
  if (top.is_zero()) throw std::runtime_error("build_B: unexpected zero corner entry");
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) B.at(i, j) /= top;
  QMatrix B0 = classical_B0(id);
  if (B.evaluate_at(1) != B0)
    throw std::runtime_error("build_B: classical limit does not match the invariant form");
  return B;
}

RMatrixData build_R(SeriesId id) {
  RMatrixData d;
  d.id = id;
  d.R = raw_R(id);
  if (!check_qybe(d.R)) throw std::runtime_error("build_R: QYBE failed");
  if (!d.R.evaluate_at(1).is_identity())
    throw std::runtime_error("build_R: classical limit is not the identity");
  d.R_inv = d.R.inverse();
  int N = id.N;
  QMatrix half(N * N, N * N);
  QScalar two(2);
  QMatrix dR = d.R.derivative_at_one();
  for (int i = 0; i < N * N; ++i)
    for (int j = 0; j < N * N; ++j) half.at(i, j) = dR.at(i, j) / two;
  d.r_classical = half;
  QMatrix P = flip_matrix(N);
  QMatrix flipped = P * d.r_classical * P;
  d.r_minus = (d.r_classical - flipped) * (QScalar(1) / two);
  d.omega_rep = (d.r_classical + flipped) * (QScalar(1) / two);
  if (!check_cybe(d.r_classical))
    throw std::runtime_error("build_R: derived r fails the classical Yang-Baxter equation");
  if (id.series != Series::A) d.B_form = build_B(id);
  return d;
}

}  // namespace qgw

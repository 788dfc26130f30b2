#include "bombon/random.hpp"

#include <cmath>

namespace bombon {

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

CVector gaussian_vector(Rng& rng, Eigen::Index size) {
  CVector v(size);
  for (Eigen::Index i = 0; i < size; ++i) v[i] = complex_gaussian(rng);
  return v;
}

CMatrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_gaussian(rng);
  return m;
}

double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

ProjPoint sample_point(Rng& rng, int n) {
  CVector v = gaussian_vector(rng, n + 1);
  while (v.norm() < 1e-12) v = gaussian_vector(rng, n + 1);
  return ProjPoint(v);
}

CMatrix random_unitary(Rng& rng, Eigen::Index size) {
  const CMatrix g = gaussian_matrix(rng, size, size);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(size, size);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < size; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMatrix random_invertible(Rng& rng, Eigen::Index size, double max_condition) {
  const CMatrix u = random_unitary(rng, size);
  const CMatrix v = random_unitary(rng, size);
  RVector s(size);
  const double log_max = std::log(max_condition);
  for (Eigen::Index i = 0; i < size; ++i) s[i] = std::exp(uniform(rng, 0.0, log_max));
  return u * s.cast<Complex>().asDiagonal() * v.adjoint();
}

HermitianMatrix random_hermitian_with_counts(Rng& rng, int n_pos, int n_neg, int n_zero,
                                             double max_condition) {
  const int size = n_pos + n_neg + n_zero;
  RVector d(size);
  int k = 0;
  for (int i = 0; i < n_pos; ++i) d[k++] = uniform(rng, 0.5, 2.0);
  for (int i = 0; i < n_neg; ++i) d[k++] = -uniform(rng, 0.5, 2.0);
  for (int i = 0; i < n_zero; ++i) d[k++] = 0.0;
  const CMatrix t = random_invertible(rng, size, max_condition);
  // Normalize so |A|_inf stays O(1); the signature is unaffected.
  CMatrix a = t.adjoint() * d.cast<Complex>().asDiagonal() * t;
  a = (a + a.adjoint()) / 2.0;
  a /= inf_norm(a);
  return HermitianMatrix(a);
}

SignatureCounts random_mixed_counts(Rng& rng, int n, bool allow_kernel) {
  const int size = n + 1;
  std::uniform_int_distribution<int> zero_dist(0, allow_kernel ? size - 2 : 0);
  const int n_zero = zero_dist(rng);
  std::uniform_int_distribution<int> pos_dist(1, size - n_zero - 1);
  const int n_pos = pos_dist(rng);
  return {n_pos, size - n_zero - n_pos, n_zero};
}

HermitianMatrix random_hermitian(Rng& rng, Eigen::Index size) {
  const CMatrix g = gaussian_matrix(rng, size, size);
  return HermitianMatrix(CMatrix((g + g.adjoint()) / 2.0));
}

}  // namespace bombon

#pragma once

#include "bombon/projective.hpp"

namespace bombon {

/// Square complex matrix equal to its adjoint. Input is accepted when it is
/// Hermitian to within 1e-12 (scaled by max(1, |M|_inf)) and is then
/// replaced by (M + M*)/2 so downstream code sees an exactly Hermitian array.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const CMatrix& m);
  static HermitianMatrix diagonal(const RVector& d);

  const CMatrix& matrix() const noexcept { return m_; }
  Eigen::Index size() const noexcept { return m_.rows(); }
  double norm_inf() const noexcept { return norm_inf_; }

  /// v* M v for any (not necessarily normalized) v; the imaginary part is dropped.
  double quadratic(const CVector& v) const { return v.dot(m_ * v).real(); }
  /// u* M v.
  Complex sesquilinear(const CVector& u, const CVector& v) const { return u.dot(m_ * v); }

  HermitianMatrix operator-() const { return HermitianMatrix(-m_); }
  /// T* M T.
  HermitianMatrix congruence(const CMatrix& t) const;

 private:
  CMatrix m_;
  double norm_inf_ = 0.0;
};

/// Eigen-decomposition summary. eigvals are ascending and eigbasis holds the
/// matching unitary columns; counts use the threshold stored in `tau`.
struct Signature {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;
  RVector eigvals;
  CMatrix eigbasis;
  double tau = 0.0;

  int size() const noexcept { return n_pos + n_neg + n_zero; }
  bool mixed() const noexcept { return n_pos > 0 && n_neg > 0; }
  /// Columns of eigbasis with eigenvalue > tau, < -tau, or in between.
  CMatrix positive_vectors() const;
  CMatrix negative_vectors() const;
  CMatrix kernel_vectors() const;
  RVector positive_values() const;
  RVector negative_values() const;
  /// Smallest |eigenvalue| among the nonzero ones, or +inf.
  double smallest_nonzero_magnitude() const;
};

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius norm is at
/// rounding level (4 eps |A|_F); throws NoConvergence after 100 sweeps.
Signature hermitian_eig(const HermitianMatrix& m, const Tolerance& tol = {});

}  // namespace bombon

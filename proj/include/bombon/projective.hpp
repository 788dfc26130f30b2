#pragma once

// Homogeneous-coordinate objects in CP^n and the tolerance scheme shared by
// every rank and sign decision in the library.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace bombon {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Rank and zero decisions use tau = rel * max(1, scale), where scale is the
/// infinity norm of whatever matrix the decision concerns.
struct Tolerance {
  double rel = 1e-9;

  double tau(double scale) const { return rel * (scale > 1.0 ? scale : 1.0); }
};

/// Maximum absolute row sum.
double inf_norm(const CMatrix& m);

/// Nonzero coordinate vector [x0 : ... : xn]. Construction rejects NaN/Inf
/// and vectors whose entries all lie below 1e-300 in modulus.
class HVector {
 public:
  explicit HVector(CVector coords);
  HVector(std::initializer_list<Complex> coords);

  const CVector& coords() const noexcept { return coords_; }
  Eigen::Index size() const noexcept { return coords_.size(); }
  int ambient_dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  const Complex& operator[](Eigen::Index i) const { return coords_[i]; }

 private:
  CVector coords_;
};

/// Scales v so that its first maximum-modulus coordinate (ties within a
/// relative 1e-12) becomes exactly 1.
HVector canonicalize(const HVector& v);

/// A point of CP^n stored through its canonical representative.
class ProjPoint {
 public:
  explicit ProjPoint(const HVector& v);
  explicit ProjPoint(const CVector& v) : ProjPoint(HVector(v)) {}
  ProjPoint(std::initializer_list<Complex> coords) : ProjPoint(HVector(coords)) {}

  const CVector& rep() const noexcept { return rep_.coords(); }
  /// Unit-norm representative (the canonical one divided by its norm).
  CVector unit() const { return rep_.coords().normalized(); }
  int ambient_dim() const noexcept { return rep_.ambient_dim(); }

  /// Projective equality: 1 - |<p, q>| <= tol for unit representatives.
  bool approx_equal(const ProjPoint& other, double tol = 1e-9) const;

 private:
  HVector rep_;
};

/// Fubini-Study style distance 1 - |<p,q>| between unit representatives.
double projective_distance(const CVector& p, const CVector& q);

class ProjLine {
 public:
  /// Throws CoincidentPoints when a and b are projectively equal.
  ProjLine(const HVector& a, const HVector& b);
  ProjLine(const ProjPoint& p, const ProjPoint& q);

  const CVector& a() const noexcept { return a_; }
  const CVector& b() const noexcept { return b_; }
  int ambient_dim() const noexcept { return static_cast<int>(a_.size()) - 1; }
  /// Orthonormal (n+1) x 2 basis of the underlying 2-plane.
  const CMatrix& basis() const noexcept { return basis_; }

 private:
  CVector a_;
  CVector b_;
  CMatrix basis_;
};

/// Projective subspace given by an orthonormal column basis; the empty
/// subspace has zero columns and projective dimension -1.
class Subspace {
 public:
  /// Empty subspace of CP^n.
  explicit Subspace(int ambient_dim);
  /// Column span of `columns`; rank decided relative to the largest column norm.
  Subspace(const CMatrix& columns, double rel_tol = 1e-9);

  static Subspace whole(int ambient_dim);

  int ambient_dim() const noexcept { return ambient_dim_; }
  int projective_dim() const noexcept { return static_cast<int>(basis_.cols()) - 1; }
  bool empty() const noexcept { return basis_.cols() == 0; }
  const CMatrix& basis() const noexcept { return basis_; }

  /// Distance of the unit representative from the span is at most tol.
  bool contains(const CVector& v, double tol = 1e-9) const;
  bool contains(const ProjPoint& p, double tol = 1e-9) const { return contains(p.unit(), tol); }
  /// Every basis vector of `other` lies in this subspace.
  bool contains(const Subspace& other, double tol = 1e-9) const;
  /// Orthogonal projector onto the span.
  CMatrix projector() const { return basis_ * basis_.adjoint(); }

 private:
  int ambient_dim_;
  CMatrix basis_;
};

/// Orthonormal basis of the column span by modified Gram-Schmidt with one
/// re-orthogonalization pass. Columns whose residual falls below
/// rel_tol * (largest input column norm) are dropped.
CMatrix orthonormal_basis(const CMatrix& columns, double rel_tol = 1e-9);

/// Orthonormal basis of {v : rows * v = 0}.
CMatrix null_space(const CMatrix& rows, double rel_tol = 1e-9);

ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
bool point_on_line(const ProjLine& line, const ProjPoint& p, double tol = 1e-9);
Subspace span(const std::vector<ProjPoint>& points, int ambient_dim);
Subspace span(const Subspace& s, const Subspace& t);
Subspace meet(const Subspace& s, const Subspace& t);

}  // namespace bombon

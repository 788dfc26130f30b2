#include "bombon/projective.hpp"

#include <algorithm>
#include <cmath>

#include "bombon/error.hpp"

namespace bombon {

double inf_norm(const CMatrix& m) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) best = std::max(best, m.row(i).cwiseAbs().sum());
  return best;
}

HVector::HVector(CVector coords) : coords_(std::move(coords)) {
  if (coords_.size() == 0) throw Error(ErrorCode::ZeroVector, "empty coordinate vector");
  bool nonzero = false;
  for (Eigen::Index i = 0; i < coords_.size(); ++i) {
    const Complex z = coords_[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::BadInput, "non-finite homogeneous coordinate");
    if (std::abs(z) >= 1e-300) nonzero = true;
  }
  if (!nonzero) throw Error(ErrorCode::ZeroVector, "all homogeneous coordinates vanish");
}

HVector::HVector(std::initializer_list<Complex> coords)
    : HVector(CVector(Eigen::Map<const CVector>(coords.begin(), static_cast<Eigen::Index>(coords.size())))) {}

HVector canonicalize(const HVector& v) {
  const CVector& c = v.coords();
  double max_mod = 0.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) max_mod = std::max(max_mod, std::abs(c[i]));
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (std::abs(c[i]) >= max_mod * (1.0 - 1e-12)) {
      pivot = i;
      break;
    }
  }
  CVector out = c / c[pivot];
  out[pivot] = Complex(1.0, 0.0);
  return HVector(std::move(out));
}

ProjPoint::ProjPoint(const HVector& v) : rep_(canonicalize(v)) {}

double projective_distance(const CVector& p, const CVector& q) {
  const double overlap = std::abs(p.normalized().dot(q.normalized()));
  return std::max(0.0, 1.0 - overlap);
}

bool ProjPoint::approx_equal(const ProjPoint& other, double tol) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  return projective_distance(rep(), other.rep()) <= tol;
}

ProjLine::ProjLine(const HVector& a, const HVector& b) : a_(a.coords()), b_(b.coords()) {
  if (a_.size() != b_.size()) throw Error(ErrorCode::DimensionMismatch, "line endpoints differ in dimension");
  if (projective_distance(a_, b_) <= 1e-9)
    throw Error(ErrorCode::CoincidentPoints, "line through coincident points");
  CMatrix cols(a_.size(), 2);
  cols.col(0) = a_;
  cols.col(1) = b_;
  basis_ = orthonormal_basis(cols);
  if (basis_.cols() != 2) throw Error(ErrorCode::CoincidentPoints, "line endpoints are dependent");
}

ProjLine::ProjLine(const ProjPoint& p, const ProjPoint& q) : ProjLine(HVector(p.rep()), HVector(q.rep())) {}

CMatrix orthonormal_basis(const CMatrix& columns, double rel_tol) {
  double largest = 0.0;
  for (Eigen::Index j = 0; j < columns.cols(); ++j) largest = std::max(largest, columns.col(j).norm());
  CMatrix q(columns.rows(), 0);
  if (largest == 0.0) return q;
  const double cutoff = rel_tol * largest;
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    CVector v = columns.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < q.cols(); ++k) v -= q.col(k) * q.col(k).dot(v);
    }
    const double r = v.norm();
    if (r <= cutoff) continue;
    q.conservativeResize(Eigen::NoChange, q.cols() + 1);
    q.col(q.cols() - 1) = v / r;
  }
  return q;
}

CMatrix null_space(const CMatrix& rows, double rel_tol) {
  const Eigen::Index n = rows.cols();
  if (rows.rows() == 0) return CMatrix::Identity(n, n);
  Eigen::JacobiSVD<CMatrix> svd(rows, Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > rel_tol * std::max(1.0, smax)) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

Subspace::Subspace(int ambient_dim) : ambient_dim_(ambient_dim), basis_(ambient_dim + 1, 0) {}

Subspace::Subspace(const CMatrix& columns, double rel_tol)
    : ambient_dim_(static_cast<int>(columns.rows()) - 1), basis_(orthonormal_basis(columns, rel_tol)) {}

Subspace Subspace::whole(int ambient_dim) {
  return Subspace(CMatrix::Identity(ambient_dim + 1, ambient_dim + 1));
}

bool Subspace::contains(const CVector& v, double tol) const {
  if (v.size() != ambient_dim_ + 1) return false;
  const CVector u = v.normalized();
  const CVector residual = u - basis_ * (basis_.adjoint() * u);
  return residual.norm() <= tol;
}

bool Subspace::contains(const Subspace& other, double tol) const {
  for (Eigen::Index j = 0; j < other.basis().cols(); ++j)
    if (!contains(CVector(other.basis().col(j)), tol)) return false;
  return true;
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "points live in different spaces");
  return ProjLine(p, q);
}

bool point_on_line(const ProjLine& line, const ProjPoint& p, double tol) {
  const CVector u = p.unit();
  const CMatrix& b = line.basis();
  return (u - b * (b.adjoint() * u)).norm() <= tol;
}

Subspace span(const std::vector<ProjPoint>& points, int ambient_dim) {
  if (points.empty()) return Subspace(ambient_dim);
  CMatrix cols(ambient_dim + 1, static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].ambient_dim() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch, "span of points from different spaces");
    cols.col(static_cast<Eigen::Index>(j)) = points[j].unit();
  }
  return Subspace(cols);
}

Subspace span(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "span of subspaces");
  CMatrix cols(s.ambient_dim() + 1, s.basis().cols() + t.basis().cols());
  cols << s.basis(), t.basis();
  return Subspace(cols);
}

Subspace meet(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "meet of subspaces");
  if (s.empty() || t.empty()) return Subspace(s.ambient_dim());
  // v = S a = T b  <=>  [S, -T] (a; b) = 0
  CMatrix stacked(s.ambient_dim() + 1, s.basis().cols() + t.basis().cols());
  stacked << s.basis(), -t.basis();
  const CMatrix kernel = null_space(stacked);
  if (kernel.cols() == 0) return Subspace(s.ambient_dim());
  const CMatrix vectors = s.basis() * kernel.topRows(s.basis().cols());
  return Subspace(vectors);
}

}  // namespace bombon

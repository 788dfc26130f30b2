#include "bombon/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "bombon/error.hpp"

namespace bombon {

namespace {

constexpr Complex kI{0.0, 1.0};

Vec2 as_vec2(const ProjPoint& p) {
  if (p.ambient_dim() != 1) throw Error(ErrorCode::DimensionMismatch, "expected a point of CP^1");
  return Vec2(p.rep()[0], p.rep()[1]);
}

// Rows annihilating z1 and z2, scaled so z3 lands on [1:1].
Mat2 to_zero_inf_one(const Vec2& z1, const Vec2& z2, const Vec2& z3) {
  Mat2 s;
  s << z1[1], -z1[0], z2[1], -z2[0];
  const Complex a = (s.row(0) * z3)(0);
  const Complex b = (s.row(1) * z3)(0);
  if (std::abs(a) < 1e-14 || std::abs(b) < 1e-14)
    throw Error(ErrorCode::CoincidentPoints, "three points must be distinct");
  s.row(0) /= a;
  s.row(1) /= b;
  return s;
}

}  // namespace

ProjPoint finite_point(Complex z) { return ProjPoint(HVector{z, Complex(1.0, 0.0)}); }
ProjPoint infinity_point() { return ProjPoint(HVector{Complex(1.0, 0.0), Complex(0.0, 0.0)}); }

MoebiusMap::MoebiusMap(const Mat2& m) {
  const Complex det = m.determinant();
  if (std::abs(det) < 1e-14 * std::max(1.0, m.cwiseAbs2().sum()))
    throw Error(ErrorCode::BadInput, "Moebius matrix is singular");
  m_ = m / std::sqrt(det);
}

MoebiusMap MoebiusMap::inverse() const {
  Mat2 inv;
  inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
  return MoebiusMap(inv);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& other) const { return MoebiusMap(m_ * other.m_); }

ProjPoint MoebiusMap::apply(const ProjPoint& z) const { return ProjPoint(CVector(m_ * as_vec2(z))); }

double moebius_distance(const MoebiusMap& f, const MoebiusMap& g) {
  return std::min((f.matrix() - g.matrix()).norm(), (f.matrix() + g.matrix()).norm());
}

GenCircle::GenCircle(const Mat2& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw Error(ErrorCode::BadInput, "circle form must be Hermitian");
  m_ = (m + m.adjoint()) / 2.0;
  if (m_.determinant().real() >= 0.0)
    throw Error(ErrorCode::NotABombon, "circle form needs signature (1,1)");
}

double GenCircle::value(const Vec2& z) const { return z.dot(m_ * z).real() / z.squaredNorm(); }

double GenCircle::value(const ProjPoint& z) const { return value(as_vec2(z)); }

bool GenCircle::contains(const ProjPoint& z, double tol) const {
  return std::abs(value(z)) <= tol * std::max(1.0, inf_norm(m_));
}

Vec2 GenCircle::witness_zero() const {
  const Signature s = hermitian_eig(HermitianMatrix(CMatrix(m_)));
  // eigvals ascending: column 0 negative, column 1 positive.
  const double neg = -s.eigvals[0];
  const double pos = s.eigvals[1];
  const Vec2 v = std::sqrt(neg) * s.eigbasis.col(1) + std::sqrt(pos) * s.eigbasis.col(0);
  return v;
}

bool GenCircle::is_round() const { return std::abs(m_(0, 0).real()) > 1e-12 * m_.cwiseAbs().maxCoeff(); }

Complex GenCircle::center() const {
  // a|z|^2 + 2 Re(conj(z) b) + d = a |z + b/a|^2 - |b|^2/a + d with b = M(0,1).
  return -m_(0, 1) / m_(0, 0).real();
}

double GenCircle::radius() const {
  const double a = m_(0, 0).real();
  const double d = m_(1, 1).real();
  return std::sqrt(std::norm(m_(0, 1)) / (a * a) - d / a);
}

GenCircle unit_circle() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return GenCircle(m);
}

GenCircle real_line() {
  Mat2 m;
  m << 0.0, kI, -kI, 0.0;
  return GenCircle(m);
}

Disk unit_disk() { return Disk{unit_circle(), -1}; }

GenCircle pushforward_circle(const MoebiusMap& f, const GenCircle& c) {
  const Mat2 inv = f.inverse().matrix();
  return GenCircle(Mat2(inv.adjoint() * c.matrix() * inv));
}

GenCircle circle_through(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  const Vec2 pts[3] = {as_vec2(p1), as_vec2(p2), as_vec2(p3)};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (projective_distance(pts[i], pts[j]) <= 1e-12)
        throw Error(ErrorCode::CoincidentPoints, "circle_through needs three distinct points");
  // Unknowns (a, Re b, Im b, d) of M = [[a, b], [conj b, d]]:
  // z* M z = a|x|^2 + d|y|^2 + 2 Re(b * conj(x) y).
  Eigen::Matrix<double, 3, 4> rows;
  for (int i = 0; i < 3; ++i) {
    const Vec2 z = pts[i].normalized();
    const Complex w = std::conj(z[0]) * z[1];
    rows(i, 0) = std::norm(z[0]);
    rows(i, 1) = 2.0 * w.real();
    rows(i, 2) = -2.0 * w.imag();
    rows(i, 3) = std::norm(z[1]);
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(rows, Eigen::ComputeFullV);
  Eigen::Vector4d coef = svd.matrixV().col(3);
  Eigen::Index arg = 0;
  coef.cwiseAbs().maxCoeff(&arg);
  if (coef[arg] < 0.0) coef = -coef;
  // Ties in magnitude resolve to the first index; re-check it for sign.
  for (Eigen::Index k = 0; k < 4; ++k) {
    if (std::abs(coef[k]) >= std::abs(coef[arg]) * (1.0 - 1e-9)) {
      if (coef[k] < 0.0) coef = -coef;
      break;
    }
  }
  Mat2 m;
  m << coef[0], Complex(coef[1], coef[2]), Complex(coef[1], -coef[2]), coef[3];
  m /= m.norm();
  return GenCircle(m);
}

ProjPoint conjugate_point(const GenCircle& c, const ProjPoint& u, double tol) {
  if (c.contains(u, tol)) throw Error(ErrorCode::PointOnCircle, "point lies on the circle");
  const Vec2 w = c.matrix() * as_vec2(u).normalized();
  // v with conj(v) . w = 0.
  return ProjPoint(HVector{-std::conj(w[1]), std::conj(w[0])});
}

MoebiusMap map_three_points(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                            const ProjPoint& w1, const ProjPoint& w2, const ProjPoint& w3) {
  const Mat2 sz = to_zero_inf_one(as_vec2(z1), as_vec2(z2), as_vec2(z3));
  const Mat2 sw = to_zero_inf_one(as_vec2(w1), as_vec2(w2), as_vec2(w3));
  return MoebiusMap(Mat2(sw.inverse() * sz));
}

MoebiusMap rotation(const GenCircle& c, const ProjPoint& u, double theta, double tol) {
  const ProjPoint v = conjugate_point(c, u, tol);
  const ProjPoint w0(CVector(c.witness_zero()));
  // h: witness zero -> 0, u -> i, conjugate -> -i, so h(circle) = real line.
  const MoebiusMap h = map_three_points(w0, u, v, finite_point(0.0), finite_point(kI), finite_point(-kI));
  const double ch = std::cos(theta / 2.0);
  const double sh = std::sin(theta / 2.0);
  Mat2 model;
  model << ch, sh, -sh, ch;
  return h.inverse().compose(MoebiusMap(model)).compose(h);
}

}  // namespace bombon

#pragma once

// CP^1 machinery: Moebius maps as 2x2 matrices, generalized circles as 2x2
// Hermitian forms of signature (1,1), conjugate points and rotation subgroups.

#include "bombon/hermitian.hpp"

namespace bombon {

using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

/// Point of CP^1 for a finite complex number z, i.e. [z : 1].
ProjPoint finite_point(Complex z);
/// [1 : 0].
ProjPoint infinity_point();

/// Invertible 2x2 matrix scaled to determinant 1.
class MoebiusMap {
 public:
  explicit MoebiusMap(const Mat2& m);
  static MoebiusMap identity() { return MoebiusMap(Mat2::Identity()); }

  const Mat2& matrix() const noexcept { return m_; }
  MoebiusMap inverse() const;
  /// (this o other)(z) = this(other(z)).
  MoebiusMap compose(const MoebiusMap& other) const;
  ProjPoint apply(const ProjPoint& z) const;

 private:
  Mat2 m_;
};

inline ProjPoint apply(const MoebiusMap& f, const ProjPoint& z) { return f.apply(z); }

/// Maps that agree on every sampled point agree as projective maps; this
/// compares the matrices up to the sign left free by det = 1.
double moebius_distance(const MoebiusMap& f, const MoebiusMap& g);

/// Zero set on CP^1 of a 2x2 Hermitian form with negative determinant.
class GenCircle {
 public:
  /// Throws NotABombon when det(M) >= 0 (no (1,1) signature).
  explicit GenCircle(const Mat2& m);

  const Mat2& matrix() const noexcept { return m_; }
  /// z* M z for the unit representative of z.
  double value(const ProjPoint& z) const;
  double value(const Vec2& z) const;
  bool contains(const ProjPoint& z, double tol = 1e-9) const;
  /// A deterministic zero of the form, used to pin down orientation choices.
  Vec2 witness_zero() const;
  /// For round circles (M(0,0) != 0): centre and radius in the chart [z:1].
  bool is_round() const;
  Complex center() const;
  double radius() const;

 private:
  Mat2 m_;
};

/// One of the two components of CP^1 minus a circle: the side where the
/// form has sign `sign` (+1 or -1).
struct Disk {
  GenCircle circle;
  int sign = -1;

  bool contains(const ProjPoint& z) const { return sign * circle.value(z) > 0.0; }
};

/// Unit circle, real line and the unit disk as stored forms.
GenCircle unit_circle();
GenCircle real_line();
Disk unit_disk();

/// Circle carried to f(circle): M' = f^{-*} M f^{-1}.
GenCircle pushforward_circle(const MoebiusMap& f, const GenCircle& c);

/// Hermitian form vanishing at three distinct points, normalized to unit
/// Frobenius norm with its largest coefficient positive.
GenCircle circle_through(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3);

/// Inversion of u in the circle: the point v with v* M u = 0.
ProjPoint conjugate_point(const GenCircle& c, const ProjPoint& u, double tol = 1e-9);

/// Moebius map sending z1, z2, z3 to w1, w2, w3.
MoebiusMap map_three_points(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                            const ProjPoint& w1, const ProjPoint& w2, const ProjPoint& w3);

/// Elliptic map fixing u and its conjugate, preserving the circle. Built by
/// conjugating z -> (z cos(t/2) + sin(t/2)) / (-z sin(t/2) + cos(t/2)) on the
/// model (real line, u = i); positive theta turns counterclockwise about u.
MoebiusMap rotation(const GenCircle& c, const ProjPoint& u, double theta, double tol = 1e-9);

}  // namespace bombon

#pragma once

// Convex bodies in C^n given by membership oracles: complex-line sections,
// the minimal-volume enclosing complex ellipsoid and linear closure on the
// unit sphere with complex-line circles as its lines.

#include <functional>
#include <string>
#include <vector>

#include "bombon/random.hpp"

namespace bombon::convex {

/// Body contained in the ball of radius bounding_radius about the origin.
/// The predicate must be safe to call concurrently.
struct ConvexBodyOracle {
  std::function<bool(const CVector&)> contains;
  double bounding_radius = 1.0;
  int dim = 1;
  std::string description;
};

/// {x : (x - center)* H (x - center) <= 1}, H positive definite.
struct ComplexEllipsoid {
  CVector center;
  CMatrix H;

  double gauge(const CVector& x) const { return (x - center).dot(H * (x - center)).real(); }
};

ConvexBodyOracle ball(int dim, double radius = 1.0);
ConvexBodyOracle ellipsoid_body(const ComplexEllipsoid& e);
/// Polydisk {|z_1| <= 1, ..., |z_n| <= 1}.
ConvexBodyOracle polydisk(int dim);

struct AffineComplexLine {
  CVector base;
  CVector direction;  ///< unit norm

  AffineComplexLine(CVector base, CVector direction);
  CVector at(Complex zeta) const { return base + zeta * direction; }
};

enum class DiskTag { Empty, Point, Disk, NotADisk };
std::string to_string(DiskTag t);

struct DiskVerdict {
  DiskTag tag = DiskTag::Empty;
  Complex center{0.0, 0.0};  ///< in the line parameter zeta
  double radius = 0.0;
  double deviation = 0.0;    ///< max |dist(boundary, center) - radius| / radius
};

struct DiskSectionConfig {
  int rays = 256;
  int grid = 64;                 ///< grid pitch is bounding_radius / grid
  int bisection_steps = 60;
  int convexity_checks = 64;
};

/// Classifies L cap K as empty, a point, a round disk (relative deviation of
/// the boundary from the least-squares circle <= tol) or not a disk. Throws
/// OracleInconsistent when sampled midpoints of inside points fall outside.
DiskVerdict disk_section_test(const ConvexBodyOracle& body, const AffineComplexLine& line, double tol,
                              const DiskSectionConfig& cfg = {});

struct MveeResult {
  ComplexEllipsoid ellipsoid;
  std::vector<double> weights;
  int iterations = 0;
  /// Relative gap max_i leverage_i / (n + 1) - 1 at termination.
  double eps_achieved = 0.0;
  /// Best dual bound minus current log det, after every iteration; never increases.
  std::vector<double> gap_history;
};

/// Khachiyan iteration with away steps on the lifted points (x, 1) and the
/// Hermitian moment matrix sum_i u_i q_i q_i*. The returned ellipsoid is
/// scaled so every point satisfies (x - c)* H (x - c) <= 1. Iteration runs
/// to a gap of eps / 100, so eps_achieved is normally well below eps.
/// Throws DegenerateSpan when the points lie in a proper complex affine
/// subspace and NoConvergence after max_iterations.
MveeResult mvee_complex(const std::vector<CVector>& points, double eps, int max_iterations = 100000);

/// Touching points (gauge >= 1 - 10 eps) span C^n after centering at E's center.
bool john_touchpoint_check(const std::vector<CVector>& points, const ComplexEllipsoid& e, double eps);

/// Complex affine subspace base + span(directions), directions orthonormal.
struct AffineHull {
  CVector base;
  CMatrix directions;

  int dim() const noexcept { return static_cast<int>(directions.cols()); }
  bool contains(const CVector& x, double tol = 1e-9) const;
  bool contains(const AffineHull& other, double tol = 1e-9) const;
  /// Point of the hull closest to the origin.
  CVector foot() const;
};

/// Complex affine hull of points on the unit sphere; its intersection with
/// the sphere is their linear closure. Throws NotOnSphere.
AffineHull linear_closure(const std::vector<CVector>& points);

/// Random points of the sphere meet the hull (none when the hull misses the sphere).
std::vector<CVector> sample_closure(const AffineHull& hull, Rng& rng, int count);

/// The circle (complex line through x and y) cap sphere, sampled at k points.
std::vector<CVector> abstract_line_points(const CVector& x, const CVector& y, int k);

struct ClosureAudit {
  int pairs = 0;
  int escapes = 0;  ///< abstract-line samples that leave the closure
};

/// Checks the closure is linearly closed on `pairs` random pairs of its points.
ClosureAudit audit_linear_closure(const AffineHull& hull, Rng& rng, int pairs = 200);

}  // namespace bombon::convex

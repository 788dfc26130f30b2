#pragma once

// Monte-Carlo check of the bombon axioms for a set known only through a
// side oracle {U, V, ON}. Each sampled line is viewed as the Bloch sphere of
// an orthonormal basis; generalized circles on a line are exactly plane
// sections of that sphere, which is what the shape fit tests.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bombon/json_io.hpp"
#include "bombon/quadric.hpp"

namespace bombon {

struct OracleSet {
  /// Side of a point, given any nonzero representative.
  std::function<SideSign(const CVector&)> side;
  int ambient_dim = 1;
  std::string description;
};

/// Oracle for a quadric: the thresholded sign of its form.
OracleSet quadric_oracle(const QuadricBombon& x);
/// Boundary of the bidisk {|z0| <= 1, |z1| <= 1} in the chart x2 = 1 of CP^2;
/// U is the interior. `band` is the relative ON tolerance.
OracleSet bidisk_oracle(double band = 1e-9);

struct VerifyTolerances {
  int grid_points = 128;
  int dense_grid_points = 1024;   ///< used when the coarse grid sees a single side
  int bisection_steps = 48;
  int neighbours = 6;
  double circle_residual = 1e-4;  ///< plane-fit residual on the unit sphere
  double cluster_radius = 0.3;    ///< ON points within this chord form one cluster
};

struct RunConfig {
  std::uint64_t seed = 1;
  int n_lines = 200;
  VerifyTolerances tol;
  std::string output_format = "json";
};

/// Shape of the ON set on one line. Nonconforming covers every zero set that
/// is not empty, a point, a generalized circle or the whole line.
enum class LineShape { Empty, SinglePoint, Circle, FullLine, Nonconforming };
std::string to_string(LineShape s);

struct LineVerdict {
  LineShape shape = LineShape::Empty;
  CMatrix basis;                  ///< orthonormal basis of the line
  Eigen::Vector3d plane_normal = Eigen::Vector3d::Zero();  ///< Circle: n . s = offset on the Bloch sphere
  double plane_offset = 0.0;
  double fit_residual = 0.0;
  int crossings = 0;
  bool two_sides_ok = true;       ///< Circle only
  /// Circle whose smaller cap is narrower than the dense grid spacing.
  bool low_confidence = false;
};

struct AxiomReport {
  RunConfig config;
  std::string description;
  int lines_tested = 0;
  std::map<LineShape, int> tallies;
  int two_sides_violations = 0;
  int low_confidence_lines = 0;
  std::vector<int> nonconforming_lines;  ///< indices into `lines`
  std::vector<LineVerdict> lines;
  bool consistent() const noexcept { return two_sides_violations == 0 && nonconforming_lines.empty(); }
};

/// Classifies the ON set of `s` on the line spanned by the orthonormal columns
/// of `basis`. `seeds` (ambient vectors on the line) join every sampling grid.
LineVerdict classify_oracle_line(const OracleSet& s, const CMatrix& basis, const VerifyTolerances& tol,
                                 const std::vector<CVector>& seeds = {});

/// Samples cfg.n_lines lines through pairs of random points.
AxiomReport verify_axioms(const OracleSet& s, const RunConfig& cfg);

/// Samples cfg.n_lines lines through z. Throws PreconditionViolated when z is ON.
AxiomReport verify_point_star(const OracleSet& s, const ProjPoint& z, const RunConfig& cfg);

/// Bloch vector of the unit vector with coordinates (x0, x1) in an orthonormal basis.
Eigen::Vector3d bloch_vector(const Vec2& x);
/// Inverse of bloch_vector up to phase.
Vec2 bloch_point(const Eigen::Vector3d& s);

/// Angular radius of the smaller cap cut off by the zero set of a 2x2
/// Hermitian form on the Bloch sphere, or -1 when the form is semidefinite.
double circle_angular_radius(const CMatrix& restricted);

json::Json to_json(const RunConfig& cfg);
json::Json to_json(const AxiomReport& r, bool include_lines = false);
std::string to_text(const AxiomReport& r);

}  // namespace bombon

#include "bombon/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bombon/error.hpp"

namespace bombon::convex {

ConvexBodyOracle ball(int dim, double radius) {
  return {[radius](const CVector& x) { return x.norm() <= radius; }, radius, dim, "ball"};
}

ConvexBodyOracle ellipsoid_body(const ComplexEllipsoid& e) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(e.H);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw Error(ErrorCode::BadInput, "ellipsoid form must be positive definite");
  const double r = e.center.norm() + 1.0 / std::sqrt(es.eigenvalues().minCoeff());
  return {[e](const CVector& x) { return e.gauge(x) <= 1.0; }, r, static_cast<int>(e.center.size()),
          "ellipsoid"};
}

ConvexBodyOracle polydisk(int dim) {
  return {[](const CVector& x) { return x.cwiseAbs().maxCoeff() <= 1.0; }, std::sqrt(static_cast<double>(dim)),
          dim, "polydisk"};
}

AffineComplexLine::AffineComplexLine(CVector b, CVector d) : base(std::move(b)), direction(std::move(d)) {
  if (base.size() != direction.size()) throw Error(ErrorCode::DimensionMismatch, "line base and direction differ");
  const double nd = direction.norm();
  if (nd < 1e-300) throw Error(ErrorCode::ZeroVector, "line direction vanishes");
  direction /= nd;
}

std::string to_string(DiskTag t) {
  switch (t) {
    case DiskTag::Empty: return "Empty";
    case DiskTag::Point: return "Point";
    case DiskTag::Disk: return "Disk";
    case DiskTag::NotADisk: return "NotADisk";
  }
  return "?";
}

namespace {

struct CircleFit {
  Complex center;
  double radius;
};

// Algebraic (Kasa) fit followed by Gauss-Newton on the geometric residuals.
CircleFit fit_circle(const std::vector<Complex>& pts) {
  const Eigen::Index m = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd a(m, 3);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Complex p = pts[static_cast<std::size_t>(i)];
    a(i, 0) = p.real();
    a(i, 1) = p.imag();
    a(i, 2) = 1.0;
    rhs[i] = -std::norm(p);
  }
  const Eigen::Vector3d sol = a.colPivHouseholderQr().solve(rhs);
  Complex c(-sol[0] / 2.0, -sol[1] / 2.0);
  double r = std::sqrt(std::max(0.0, std::norm(c) - sol[2]));

  for (int iter = 0; iter < 20; ++iter) {
    Eigen::MatrixXd j(m, 3);
    Eigen::VectorXd res(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Complex d = pts[static_cast<std::size_t>(i)] - c;
      const double dist = std::abs(d);
      if (dist == 0.0) return {c, r};
      res[i] = dist - r;
      j(i, 0) = -d.real() / dist;
      j(i, 1) = -d.imag() / dist;
      j(i, 2) = -1.0;
    }
    const Eigen::Vector3d step = j.colPivHouseholderQr().solve(-res);
    c += Complex(step[0], step[1]);
    r += step[2];
    if (step.norm() <= 1e-15 * std::max(1.0, r)) break;
  }
  return {c, r};
}

}  // namespace

DiskVerdict disk_section_test(const ConvexBodyOracle& body, const AffineComplexLine& line, double tol,
                              const DiskSectionConfig& cfg) {
  if (tol <= 0.0) throw Error(ErrorCode::PreconditionViolated, "tolerance must be positive");
  const double r_bound = body.bounding_radius;
  const Complex foot = -line.direction.dot(line.base);
  const double pitch = r_bound / cfg.grid;
  auto inside = [&](Complex zeta) { return body.contains(line.at(zeta)); };

  std::vector<Complex> hits;
  for (double offset : {0.0, 0.5}) {
    for (int i = -cfg.grid; i <= cfg.grid; ++i)
      for (int k = -cfg.grid; k <= cfg.grid; ++k) {
        const Complex zeta = foot + Complex((i + offset) * pitch, (k + offset) * pitch);
        if (inside(zeta)) hits.push_back(zeta);
      }
    if (!hits.empty()) break;
  }
  DiskVerdict verdict;
  if (hits.empty()) return verdict;

  Complex centroid(0.0, 0.0);
  for (const Complex& h : hits) centroid += h;
  centroid /= static_cast<double>(hits.size());
  if (!inside(centroid)) throw Error(ErrorCode::OracleInconsistent, "centroid of inside points is outside");
  const std::size_t m = hits.size();
  for (int k = 0; k < cfg.convexity_checks && m > 1; ++k) {
    const std::size_t i = (static_cast<std::size_t>(k) * 7919u) % m;
    const std::size_t j = (static_cast<std::size_t>(k) * 104729u + m / 2) % m;
    if (!inside((hits[i] + hits[j]) / 2.0))
      throw Error(ErrorCode::OracleInconsistent, "midpoint of inside points is outside");
  }

  // Beyond 2 * r_bound from any grid point the line has left the bounding ball.
  std::vector<Complex> boundary;
  boundary.reserve(static_cast<std::size_t>(cfg.rays));
  double extent = 0.0;
  for (int k = 0; k < cfg.rays; ++k) {
    const Complex dir = std::polar(1.0, 2.0 * std::numbers::pi * k / cfg.rays);
    double lo = 0.0, hi = 2.0 * r_bound + std::abs(centroid - foot);
    for (int s = 0; s < cfg.bisection_steps; ++s) {
      const double mid = 0.5 * (lo + hi);
      (inside(centroid + mid * dir) ? lo : hi) = mid;
    }
    boundary.push_back(centroid + lo * dir);
    extent = std::max(extent, lo);
  }
  if (2.0 * extent <= tol * r_bound) {
    verdict.tag = DiskTag::Point;
    verdict.center = centroid;
    return verdict;
  }
  const CircleFit fit = fit_circle(boundary);
  double dev = 0.0;
  for (const Complex& b : boundary) dev = std::max(dev, std::abs(std::abs(b - fit.center) - fit.radius));
  verdict.center = fit.center;
  verdict.radius = fit.radius;
  verdict.deviation = dev / fit.radius;
  verdict.tag = verdict.deviation <= tol ? DiskTag::Disk : DiskTag::NotADisk;
  return verdict;
}

namespace {

Eigen::Index affine_rank(const std::vector<CVector>& pts, const CVector& origin) {
  if (pts.empty()) return 0;
  CMatrix diffs(origin.size(), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) diffs.col(static_cast<Eigen::Index>(i)) = pts[i] - origin;
  return orthonormal_basis(diffs, 1e-9).cols();
}

}  // namespace

MveeResult mvee_complex(const std::vector<CVector>& points, double eps, int max_iterations) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::PreconditionViolated, "eps must lie in (0, 1)");
  if (points.empty()) throw Error(ErrorCode::DegenerateSpan, "no points");
  const Eigen::Index n = points.front().size();
  const Eigen::Index d = n + 1;
  const std::size_t count = points.size();
  for (const CVector& p : points)
    if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "points differ in dimension");
  if (affine_rank(points, points.front()) != n)
    throw Error(ErrorCode::DegenerateSpan, "points lie in a proper complex affine subspace");

  CMatrix q(d, static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    q.col(static_cast<Eigen::Index>(i)).head(n) = points[i];
    q(n, static_cast<Eigen::Index>(i)) = 1.0;
  }
  std::vector<double> u(count, 1.0 / static_cast<double>(count));
  const double dd = static_cast<double>(d);
  // Khachiyan iterates are affine-equivariant, so two runs on affinely
  // related clouds differ only if they stop at different steps. Polishing
  // past eps shrinks that one-step discrepancy well below eps.
  const double target = std::max(eps * 1e-2, 1e-14);

  MveeResult out;
  double best_dual = std::numeric_limits<double>::infinity();
  double best_primal = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd kappa(static_cast<Eigen::Index>(count));
  int iter = 0;
  for (;; ++iter) {
    CMatrix moment = CMatrix::Zero(d, d);
    for (std::size_t i = 0; i < count; ++i) moment += u[i] * q.col(static_cast<Eigen::Index>(i)) * q.col(static_cast<Eigen::Index>(i)).adjoint();
    Eigen::LLT<CMatrix> llt(moment);
    if (llt.info() != Eigen::Success) throw Error(ErrorCode::DegenerateSpan, "moment matrix lost definiteness");
    const CMatrix solved = llt.solve(q);
    for (std::size_t i = 0; i < count; ++i)
      kappa[static_cast<Eigen::Index>(i)] = q.col(static_cast<Eigen::Index>(i)).dot(solved.col(static_cast<Eigen::Index>(i))).real();

    double logdet = 0.0;
    const CMatrix& l = llt.matrixLLT();
    for (Eigen::Index k = 0; k < d; ++k) logdet += 2.0 * std::log(l(k, k).real());

    Eigen::Index j_max = 0;
    const double k_max = kappa.maxCoeff(&j_max);
    Eigen::Index j_min = -1;
    double k_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i)
      if (u[i] > 0.0 && kappa[static_cast<Eigen::Index>(i)] < k_min) {
        k_min = kappa[static_cast<Eigen::Index>(i)];
        j_min = static_cast<Eigen::Index>(i);
      }
    const double eps_plus = k_max / dd - 1.0;
    const double eps_minus = 1.0 - k_min / dd;

    best_primal = std::max(best_primal, logdet);
    best_dual = std::min(best_dual, logdet + dd * std::log(k_max / dd));
    out.gap_history.push_back(best_dual - best_primal);
    out.eps_achieved = eps_plus;
    if (eps_plus <= target) break;
    if (iter >= max_iterations) throw Error(ErrorCode::NoConvergence, "MVEE iteration limit reached");

    if (eps_plus > eps_minus) {
      const double beta = (k_max - dd) / (dd * (k_max - 1.0));
      for (double& w : u) w *= (1.0 - beta);
      u[static_cast<std::size_t>(j_max)] += beta;
    } else {
      const std::size_t k = static_cast<std::size_t>(j_min);
      const double drop = u[k] / (1.0 - u[k]);
      const double beta = k_min > 1.0 + 1e-12 ? std::min((dd - k_min) / (dd * (k_min - 1.0)), drop) : drop;
      for (double& w : u) w *= (1.0 + beta);
      u[k] -= beta;
      if (beta == drop || u[k] < 0.0) u[k] = 0.0;
    }
  }
  out.iterations = iter;
  out.weights = u;

  CVector c = CVector::Zero(n);
  for (std::size_t i = 0; i < count; ++i) c += u[i] * points[i];
  CMatrix cov = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < count; ++i) cov += u[i] * (points[i] - c) * (points[i] - c).adjoint();
  CMatrix h = cov.llt().solve(CMatrix::Identity(n, n));
  h = (h + h.adjoint()) / 2.0;
  double worst = 0.0;
  for (const CVector& p : points) worst = std::max(worst, (p - c).dot(h * (p - c)).real());
  out.ellipsoid = ComplexEllipsoid{c, h / worst};
  return out;
}

bool john_touchpoint_check(const std::vector<CVector>& points, const ComplexEllipsoid& e, double eps) {
  std::vector<CVector> touching;
  for (const CVector& p : points)
    if (e.gauge(p) >= 1.0 - 10.0 * eps) touching.push_back(p);
  return affine_rank(touching, e.center) == e.center.size();
}

bool AffineHull::contains(const CVector& x, double tol) const {
  const CVector v = x - base;
  return (v - directions * (directions.adjoint() * v)).norm() <= tol;
}

bool AffineHull::contains(const AffineHull& other, double tol) const {
  if (!contains(other.base, tol)) return false;
  for (Eigen::Index j = 0; j < other.directions.cols(); ++j) {
    const CVector v = other.directions.col(j);
    if ((v - directions * (directions.adjoint() * v)).norm() > tol) return false;
  }
  return true;
}

CVector AffineHull::foot() const { return base - directions * (directions.adjoint() * base); }

AffineHull linear_closure(const std::vector<CVector>& points) {
  if (points.empty()) throw Error(ErrorCode::BadInput, "linear closure of no points");
  for (const CVector& p : points)
    if (std::abs(p.norm() - 1.0) > 1e-9) throw Error(ErrorCode::NotOnSphere, "point is off the unit sphere");
  CMatrix diffs(points.front().size(), static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    diffs.col(static_cast<Eigen::Index>(i)) = points[i] - points.front();
  return AffineHull{points.front(), orthonormal_basis(diffs, 1e-9)};
}

std::vector<CVector> sample_closure(const AffineHull& hull, Rng& rng, int count) {
  std::vector<CVector> out;
  const CVector p = hull.foot();
  const double rho2 = 1.0 - p.squaredNorm();
  if (rho2 < 0.0) return out;
  if (hull.dim() == 0) {
    out.assign(static_cast<std::size_t>(count), p);
    return out;
  }
  const double rho = std::sqrt(rho2);
  for (int i = 0; i < count; ++i) {
    const CVector g = gaussian_vector(rng, hull.dim()).normalized();
    out.push_back(p + rho * (hull.directions * g));
  }
  return out;
}

std::vector<CVector> abstract_line_points(const CVector& x, const CVector& y, int k) {
  const CVector d = y - x;
  const double dn = d.norm();
  if (dn < 1e-14) return std::vector<CVector>(static_cast<std::size_t>(k), x);
  const CVector e = d / dn;
  const CVector p0 = x - e * e.dot(x);
  const double rho = std::sqrt(std::max(0.0, 1.0 - p0.squaredNorm()));
  std::vector<CVector> out;
  for (int i = 0; i < k; ++i) out.push_back(p0 + rho * std::polar(1.0, 2.0 * std::numbers::pi * i / k) * e);
  return out;
}

ClosureAudit audit_linear_closure(const AffineHull& hull, Rng& rng, int pairs) {
  ClosureAudit audit;
  const std::vector<CVector> pts = sample_closure(hull, rng, 2 * pairs);
  for (int i = 0; i + 1 < static_cast<int>(pts.size()); i += 2) {
    ++audit.pairs;
    for (const CVector& z : abstract_line_points(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(i) + 1], 8))
      if (!hull.contains(z, 1e-8) || std::abs(z.norm() - 1.0) > 1e-8) ++audit.escapes;
  }
  return audit;
}

}  // namespace bombon::convex

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

namespace oracle {

std::string to_string(GridTag t) {
  switch (t) {
    case GridTag::Empty: return "Empty";
    case GridTag::SinglePoint: return "SinglePoint";
    case GridTag::Circle: return "Circle";
    case GridTag::FullLine: return "FullLine";
    case GridTag::LowConfidence: return "LowConfidence";
  }
  return "?";
}

double max_row_sum(const CMatrix& m) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

namespace {

// Form value at the point of the line with spherical angles (theta, phi).
double line_value(const CMatrix& a, const CMatrix& basis, double theta, double phi) {
  const CVector v = std::cos(theta / 2) * basis.col(0) + std::polar(std::sin(theta / 2), phi) * basis.col(1);
  return v.dot(a * v).real();
}

// Compass search from (theta, phi) for the extreme value in direction sign.
double polish(const CMatrix& a, const CMatrix& basis, double theta, double phi, double sign) {
  double best = sign * line_value(a, basis, theta, phi);
  for (double step = 0.25; step > 1e-9;) {
    bool moved = false;
    for (auto [dt, dp] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
      const double t = theta + dt * step, p = phi + dp * step;
      const double v = sign * line_value(a, basis, t, p);
      if (v > best) {
        best = v;
        theta = t;
        phi = p;
        moved = true;
      }
    }
    if (!moved) step /= 2;
  }
  return sign * best;
}

}  // namespace

GridTag grid_line_tag(const CMatrix& a, const CMatrix& basis) {
  constexpr int kGrid = 128;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  double lo = INFINITY, hi = -INFINITY;
  double lo_t = 0, lo_p = 0, hi_t = 0, hi_p = 0;
  for (int i = 0; i < kGrid; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / kGrid;
    const double theta = std::acos(z), phi = golden * i;
    const double v = line_value(a, basis, theta, phi);
    if (v < lo) lo = v, lo_t = theta, lo_p = phi;
    if (v > hi) hi = v, hi_t = theta, hi_p = phi;
  }
  lo = polish(a, basis, lo_t, lo_p, -1.0);
  hi = polish(a, basis, hi_t, hi_p, 1.0);

  const double scale = std::max(max_row_sum(a), 1e-300);
  const double tol = 1e-6 * scale;
  for (double e : {lo, hi})
    if (std::abs(e) >= 1e-7 * scale && std::abs(e) <= 1e-5 * scale) return GridTag::LowConfidence;
  if (hi > tol && lo < -tol) return GridTag::Circle;
  if (lo > tol || hi < -tol) return GridTag::Empty;
  if (std::abs(lo) <= tol && std::abs(hi) <= tol) return GridTag::FullLine;
  return GridTag::SinglePoint;
}

Counts eigen_counts(const CMatrix& a, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a, Eigen::EigenvaluesOnly);
  const double tau = rel_tol * std::max(1.0, max_row_sum(a));
  Counts c;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()[i];
    if (l > tau)
      ++c.pos;
    else if (l < -tau)
      ++c.neg;
    else
      ++c.zero;
  }
  return c;
}

int sampled_positive_index(const CMatrix& a, int frames, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> g;
  const Eigen::Index m = a.rows();
  for (Eigen::Index k = m; k >= 1; --k) {
    for (int f = 0; f < frames; ++f) {
      CMatrix b(m, k);
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < k; ++j) b(i, j) = Complex(g(gen), g(gen));
      const CMatrix r = b.adjoint() * a * b;
      Eigen::LLT<CMatrix> llt(r);
      if (llt.info() == Eigen::Success) return static_cast<int>(k);
    }
  }
  return 0;
}

RealCircle circle_through_finite(Complex z1, Complex z2, Complex z3) {
  Eigen::Matrix<double, 3, 4> m;
  int r = 0;
  for (Complex z : {z1, z2, z3}) {
    m.row(r++) << std::norm(z), 2 * z.real(), 2 * z.imag(), 1.0;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(m, Eigen::ComputeFullV);
  const Eigen::Vector4d k = svd.matrixV().col(3);
  return {k[0], Complex(k[1], k[2]), k[3]};
}

double line_sine(const CVector& u, const CVector& v) {
  const CVector un = u.normalized(), vn = v.normalized();
  return (un - vn * vn.dot(un)).norm();
}

}  // namespace oracle

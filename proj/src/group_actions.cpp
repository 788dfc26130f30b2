#include "bombon/group_actions.hpp"

#include <cmath>

#include "bombon/error.hpp"

namespace bombon {

CoreSplit core_split(const QuadricBombon& x) {
  if (!x.smooth()) throw Error(ErrorCode::NotSmooth, "circle action needs a smooth bombon");
  const CMatrix pos = x.signature().positive_vectors();
  const CMatrix neg = x.signature().negative_vectors();
  return {pos * pos.adjoint(), neg * neg.adjoint()};
}

CMatrix s1_action_matrix(const CoreSplit& split, double theta) {
  return split.p_pos + std::polar(1.0, theta) * split.p_neg;
}

CVector s1_action(const QuadricBombon& x, const CoreSplit& split, double theta, const CVector& v) {
  if (!x.smooth()) throw Error(ErrorCode::NotSmooth, "circle action needs a smooth bombon");
  return split.p_pos * v + std::polar(1.0, theta) * (split.p_neg * v);
}

std::pair<ProjPoint, ProjPoint> bundle_projection(const QuadricBombon& x, const CoreSplit& split,
                                                  const CVector& v) {
  if (!x.contains(v)) throw Error(ErrorCode::NotOnQuadric, "bundle projection needs a point of X");
  const CVector u = v.normalized();
  return {ProjPoint(CVector(split.p_pos * u)), ProjPoint(CVector(split.p_neg * u))};
}

namespace {

// Basis [u, f, N S] in which the form reads [[0,1],[1,0]] (+) diag(+1.., -1..).
struct HyperbolicFrame {
  CMatrix basis;
  int n_pos = 0;
  int n_neg = 0;
};

HyperbolicFrame hyperbolic_frame(const QuadricBombon& x, const CVector& u) {
  const HermitianMatrix& a = x.form();
  const Signature& sig = x.signature();
  const Eigen::Index m = a.size();

  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    const double mag = std::abs(a.sesquilinear(u, sig.eigbasis.col(k)));
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  if (best_mag <= x.tau()) throw Error(ErrorCode::NotSmooth, "point is singular for the form");
  const CVector w = sig.eigbasis.col(best);
  const CVector f0 = w / a.sesquilinear(u, w);
  const double gamma = a.quadratic(f0) / 2.0;
  const CVector f = f0 - gamma * u;

  CMatrix rows(2, m);
  rows.row(0) = (a.matrix() * u).adjoint();
  rows.row(1) = (a.matrix() * f).adjoint();
  const CMatrix n = null_space(rows);
  if (n.cols() != m - 2) throw Error(ErrorCode::ExpectationViolated, "hyperbolic complement has wrong size");

  HyperbolicFrame frame;
  frame.basis.resize(m, m);
  frame.basis.col(0) = u;
  frame.basis.col(1) = f;
  if (m > 2) {
    const Signature cs = hermitian_eig(a.congruence(n), x.tolerance());
    Eigen::Index col = 2;
    for (int sign : {1, -1}) {
      for (Eigen::Index k = 0; k < cs.eigvals.size(); ++k) {
        const double lam = cs.eigvals[k];
        if (sign * lam <= cs.tau) continue;
        frame.basis.col(col++) = n * cs.eigbasis.col(k) / std::sqrt(std::abs(lam));
        (sign > 0 ? frame.n_pos : frame.n_neg)++;
      }
    }
    if (col != m) throw Error(ErrorCode::ExpectationViolated, "hyperbolic complement is degenerate");
  }
  return frame;
}

}  // namespace

TransportWitness homogeneity_transport(const QuadricBombon& x, const ProjPoint& from, const ProjPoint& to) {
  if (!x.smooth()) throw Error(ErrorCode::NotSmooth, "transport needs a smooth bombon");
  if (!x.contains(from.rep()) || !x.contains(to.rep()))
    throw Error(ErrorCode::NotOnQuadric, "transport endpoints must lie on X");
  const HyperbolicFrame e = hyperbolic_frame(x, from.unit());
  const HyperbolicFrame f = hyperbolic_frame(x, to.unit());
  if (e.n_pos != f.n_pos || e.n_neg != f.n_neg)
    throw Error(ErrorCode::ExpectationViolated, "complements have different signatures");
  TransportWitness w;
  w.T = f.basis * e.basis.fullPivLu().inverse();
  w.residual = inf_norm(CMatrix(w.T.adjoint() * x.matrix() * w.T - x.matrix()));
  return w;
}

bool pseudo_unitary_check(const CMatrix& t, const HermitianMatrix& a, double tol) {
  if (t.rows() != a.size() || t.cols() != a.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix sizes differ");
  return inf_norm(CMatrix(t.adjoint() * a.matrix() * t - a.matrix())) <= tol * a.norm_inf();
}

}  // namespace bombon

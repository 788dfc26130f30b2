#include "bombon/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bombon/error.hpp"

namespace bombon {

HermitianMatrix::HermitianMatrix(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::BadInput, "Hermitian matrix must be square");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        throw Error(ErrorCode::BadInput, "non-finite matrix entry");
  const double scale = std::max(1.0, inf_norm(m));
  const double skew = m.rows() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (skew > 1e-12 * scale) throw Error(ErrorCode::BadInput, "matrix is not Hermitian");
  m_ = (m + m.adjoint()) / 2.0;
  norm_inf_ = inf_norm(m_);
}

HermitianMatrix HermitianMatrix::diagonal(const RVector& d) {
  return HermitianMatrix(CMatrix(d.cast<Complex>().asDiagonal()));
}

HermitianMatrix HermitianMatrix::congruence(const CMatrix& t) const {
  CMatrix r = t.adjoint() * m_ * t;
  return HermitianMatrix(CMatrix((r + r.adjoint()) / 2.0));
}

namespace {

CMatrix select_columns(const CMatrix& basis, const RVector& vals, auto pred) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (pred(vals[i])) idx.push_back(i);
  CMatrix out(basis.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = basis.col(idx[k]);
  return out;
}

RVector select_values(const RVector& vals, auto pred) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (pred(vals[i])) out.push_back(vals[i]);
  return Eigen::Map<RVector>(out.data(), static_cast<Eigen::Index>(out.size()));
}

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

CMatrix Signature::positive_vectors() const {
  const double t = tau;
  return select_columns(eigbasis, eigvals, [t](double v) { return v > t; });
}
CMatrix Signature::negative_vectors() const {
  const double t = tau;
  return select_columns(eigbasis, eigvals, [t](double v) { return v < -t; });
}
CMatrix Signature::kernel_vectors() const {
  const double t = tau;
  return select_columns(eigbasis, eigvals, [t](double v) { return std::abs(v) <= t; });
}
RVector Signature::positive_values() const {
  const double t = tau;
  return select_values(eigvals, [t](double v) { return v > t; });
}
RVector Signature::negative_values() const {
  const double t = tau;
  return select_values(eigvals, [t](double v) { return v < -t; });
}

double Signature::smallest_nonzero_magnitude() const {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < eigvals.size(); ++i)
    if (std::abs(eigvals[i]) > tau) best = std::min(best, std::abs(eigvals[i]));
  return best;
}

Signature hermitian_eig(const HermitianMatrix& hm, const Tolerance& tol) {
  const Eigen::Index m = hm.size();
  CMatrix a = hm.matrix();
  CMatrix v = CMatrix::Identity(m, m);
  const double tau = tol.tau(hm.norm_inf());
  // Eigenvector accuracy scales with the leftover off-diagonal mass over the
  // gap, so sweep down to rounding level rather than to tau.
  const double target = std::max(4.0 * std::numeric_limits<double>::epsilon() * a.norm(), std::numeric_limits<double>::min());

  int sweep = 0;
  while (off_diagonal_norm(a) >= target) {
    if (++sweep > 100) throw Error(ErrorCode::NoConvergence, "Jacobi sweeps exhausted");
    for (Eigen::Index p = 0; p < m - 1; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        // Phase e^{-i arg a_pq} on column q makes the pivot real, then a real
        // rotation annihilates it.
        const Complex phase = std::conj(apq) / mag;
        const double theta = (gamma - alpha) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = diag(1, phase) * [[c, s], [-s, c]]
        const Complex g00 = c, g01 = s, g10 = -s * phase, g11 = c * phase;
        for (Eigen::Index r = 0; r < m; ++r) {
          const Complex arp = a(r, p), arq = a(r, q);
          a(r, p) = arp * g00 + arq * g10;
          a(r, q) = arp * g01 + arq * g11;
          const Complex vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp * g00 + vrq * g10;
          v(r, q) = vrp * g01 + vrq * g11;
        }
        for (Eigen::Index r = 0; r < m; ++r) {
          const Complex apr = a(p, r), aqr = a(q, r);
          a(p, r) = std::conj(g00) * apr + std::conj(g10) * aqr;
          a(q, r) = std::conj(g01) * apr + std::conj(g11) * aqr;
        }
        a(p, q) = a(q, p) = Complex(0.0, 0.0);
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  Signature sig;
  sig.tau = tau;
  sig.eigvals.resize(m);
  sig.eigbasis.resize(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    sig.eigvals[k] = a(src, src).real();
    sig.eigbasis.col(k) = v.col(src);
    if (sig.eigvals[k] > tau)
      ++sig.n_pos;
    else if (sig.eigvals[k] < -tau)
      ++sig.n_neg;
    else
      ++sig.n_zero;
  }
  return sig;
}

}  // namespace bombon

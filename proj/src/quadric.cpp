#include "bombon/quadric.hpp"

#include <algorithm>
#include <cmath>

#include "bombon/error.hpp"

namespace bombon {

std::string_view to_string(SideSign s) {
  switch (s) {
    case SideSign::U: return "U";
    case SideSign::V: return "V";
    case SideSign::ON: return "ON";
  }
  return "?";
}

std::string_view to_string(SpecialClass c) {
  switch (c) {
    case SpecialClass::Elliptic: return "Elliptic";
    case SpecialClass::Flat: return "Flat";
    case SpecialClass::Conical: return "Conical";
    case SpecialClass::GeneralFull: return "GeneralFull";
  }
  return "?";
}

double CongruenceWitness::residual(const HermitianMatrix& a, const HermitianMatrix& b) const {
  const CMatrix diff = T.adjoint() * a.matrix() * T - signed_scale() * b.matrix();
  return inf_norm(diff);
}

QuadricBombon::QuadricBombon(HermitianMatrix a, const Tolerance& tol)
    : a_(std::move(a)), sig_(hermitian_eig(a_, tol)), tol_(tol) {
  if (a_.size() < 2) throw Error(ErrorCode::NotABombon, "ambient dimension must be at least 1");
  if (!sig_.mixed())
    throw Error(ErrorCode::NotABombon, "form needs a positive and a negative eigenvalue");
}

QuadricBombon QuadricBombon::from_epsilons(const RVector& eps, const Tolerance& tol) {
  return QuadricBombon(HermitianMatrix::diagonal(eps), tol);
}

double QuadricBombon::value(const CVector& x) const {
  if (x.size() != a_.size()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from form");
  const double n2 = x.squaredNorm();
  if (n2 == 0.0) throw Error(ErrorCode::ZeroVector, "cannot evaluate at the zero vector");
  return a_.quadratic(x) / n2;
}

SideSign QuadricBombon::side(const CVector& x) const {
  const double v = value(x);
  if (v > sig_.tau) return SideSign::U;
  if (v < -sig_.tau) return SideSign::V;
  return SideSign::ON;
}

QuadricBombon from_epsilons(const RVector& eps, const Tolerance& tol) {
  return QuadricBombon::from_epsilons(eps, tol);
}

Evaluation evaluate(const QuadricBombon& x, const ProjPoint& p) {
  return {x.value(p.rep()), x.side(p.rep())};
}

Subspace singular_locus(const QuadricBombon& x) {
  return Subspace(x.signature().kernel_vectors());
}

BombonType bombon_type(const QuadricBombon& x) {
  const Signature& s = x.signature();
  BombonType t;
  t.p = std::min(s.n_pos, s.n_neg) - 1;
  t.q = std::max(s.n_pos, s.n_neg) - 1;
  t.n = x.ambient_dim();
  t.sing_dim = s.n_zero - 1;
  return t;
}

Cores cores(const QuadricBombon& x) {
  return {Subspace(x.signature().positive_vectors()), Subspace(x.signature().negative_vectors())};
}

CanonicalForm canonical_form(const QuadricBombon& x) {
  const Signature& s = x.signature();
  const bool swap = s.n_pos > s.n_neg;
  const double sign = swap ? -1.0 : 1.0;
  const Eigen::Index m = x.form().size();

  // Columns ordered: positive eigenvalues of sign*A, then negative, then kernel.
  std::vector<Eigen::Index> pos, neg, zero;
  for (Eigen::Index k = 0; k < m; ++k) {
    const double lam = sign * s.eigvals[k];
    if (lam > s.tau)
      pos.push_back(k);
    else if (lam < -s.tau)
      neg.push_back(k);
    else
      zero.push_back(k);
  }
  CMatrix t(m, m);
  RVector diag(m);
  Eigen::Index col = 0;
  auto emit = [&](const std::vector<Eigen::Index>& idx, double target) {
    for (Eigen::Index k : idx) {
      const double lam = std::abs(s.eigvals[k]);
      t.col(col) = target == 0.0 ? CVector(s.eigbasis.col(k)) : CVector(s.eigbasis.col(k) / std::sqrt(lam));
      diag[col] = target;
      ++col;
    }
  };
  emit(pos, 1.0);
  emit(neg, -1.0);
  emit(zero, 0.0);

  CanonicalForm out{bombon_type(x), CongruenceWitness{t, 1.0, swap}, HermitianMatrix::diagonal(diag)};
  return out;
}

CongruenceWitness equivalence_witness(const QuadricBombon& x, const QuadricBombon& y) {
  if (x.ambient_dim() != y.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "bombons live in different spaces");
  const CanonicalForm cx = canonical_form(x);
  const CanonicalForm cy = canonical_form(y);
  if (!(cx.type == cy.type)) throw Error(ErrorCode::TypeMismatch, "bombon types differ");

  // Tx* (sx A) Tx = D = Ty* (sy B) Ty  =>  (Tx Ty^-1)* A (Tx Ty^-1) = sx sy B.
  const CMatrix ty_inv = cy.witness.T.fullPivLu().inverse();
  const double lambda = x.matrix().norm() / y.matrix().norm();
  CongruenceWitness w;
  w.T = cx.witness.T * ty_inv * std::sqrt(lambda);
  w.scale = lambda;
  w.sign_swapped = cx.witness.sign_swapped != cy.witness.sign_swapped;
  return w;
}

QuadricBombon join_with_apex(const QuadricBombon& x, const CMatrix& gamma_basis, const Subspace& apex) {
  const Eigen::Index k = x.form().size();
  if (gamma_basis.cols() != k)
    throw Error(ErrorCode::DimensionMismatch, "gamma basis must have one column per coordinate of X");
  const Eigen::Index ambient = gamma_basis.rows();
  if (apex.ambient_dim() + 1 != ambient) throw Error(ErrorCode::DimensionMismatch, "apex lives elsewhere");
  if (k + apex.basis().cols() != ambient)
    throw Error(ErrorCode::NotComplementary, "dimensions of carrier and apex do not add up");
  CMatrix adapted(ambient, ambient);
  adapted << gamma_basis, apex.basis();
  Eigen::FullPivLU<CMatrix> lu(adapted);
  lu.setThreshold(1e-9);
  if (!lu.isInvertible()) throw Error(ErrorCode::NotComplementary, "carrier meets the apex");
  // Coordinates along the carrier are the top rows of the inverse adapted basis.
  const CMatrix proj = lu.inverse().topRows(k);
  CMatrix a = proj.adjoint() * x.matrix() * proj;
  a = (a + a.adjoint()) / 2.0;
  return QuadricBombon(HermitianMatrix(a), x.tolerance());
}

SpecialClass classify_special(const BombonType& t) {
  if (t.p == 0 && t.q == t.n - 1 && t.sing_dim == -1) return SpecialClass::Elliptic;
  if (t.p == 0 && t.q == 0 && t.sing_dim == t.n - 2) return SpecialClass::Flat;
  if (t.p == 0 && t.q >= 1 && t.sing_dim >= 0) return SpecialClass::Conical;
  return SpecialClass::GeneralFull;
}

SpecialClass classify_special(const QuadricBombon& x) { return classify_special(bombon_type(x)); }

}  // namespace bombon

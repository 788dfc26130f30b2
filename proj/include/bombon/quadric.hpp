#pragma once

// Algebraic bombons: zero sets {x : x* A x = 0} of Hermitian forms with mixed
// signature, up to projective image (congruence A -> T* A T).

#include <optional>
#include <string_view>
#include <utility>

#include "bombon/hermitian.hpp"

namespace bombon {

enum class SideSign { U, V, ON };
std::string_view to_string(SideSign s);

/// (p, q)_n with p <= q, plus the dimension of the singular locus.
struct BombonType {
  int p = 0;
  int q = 0;
  int n = 0;
  int sing_dim = -1;

  bool full() const noexcept { return p + q + sing_dim == n - 2; }
  friend bool operator==(const BombonType&, const BombonType&) = default;
};

enum class SpecialClass { Elliptic, Flat, Conical, GeneralFull };
std::string_view to_string(SpecialClass c);

/// Certifies T* A T = scale * sign * B, scale > 0; sign is -1 exactly when
/// the positive and negative sides had to be exchanged.
struct CongruenceWitness {
  CMatrix T;
  double scale = 1.0;
  bool sign_swapped = false;

  double signed_scale() const noexcept { return sign_swapped ? -scale : scale; }
  /// |T* A T - signed_scale * B|_inf.
  double residual(const HermitianMatrix& a, const HermitianMatrix& b) const;
};

class QuadricBombon {
 public:
  /// Throws NotABombon unless A has at least one positive and one negative
  /// eigenvalue (beyond the tolerance).
  explicit QuadricBombon(HermitianMatrix a, const Tolerance& tol = {});
  explicit QuadricBombon(const CMatrix& a, const Tolerance& tol = {})
      : QuadricBombon(HermitianMatrix(a), tol) {}

  static QuadricBombon from_epsilons(const RVector& eps, const Tolerance& tol = {});

  const HermitianMatrix& form() const noexcept { return a_; }
  const CMatrix& matrix() const noexcept { return a_.matrix(); }
  const Signature& signature() const noexcept { return sig_; }
  const Tolerance& tolerance() const noexcept { return tol_; }
  int ambient_dim() const noexcept { return static_cast<int>(a_.size()) - 1; }
  double tau() const noexcept { return sig_.tau; }
  bool smooth() const noexcept { return sig_.n_zero == 0; }

  /// Value of the form at the unit-norm representative.
  double value(const CVector& x) const;
  /// Thresholded side of a point: ON when |value| <= tau for the unit rep.
  SideSign side(const CVector& x) const;
  /// True when the unit representative satisfies |x* A x| <= tau.
  bool contains(const CVector& x) const { return side(x) == SideSign::ON; }

 private:
  HermitianMatrix a_;
  Signature sig_;
  Tolerance tol_;
};

struct Evaluation {
  double value;
  SideSign side;
};

QuadricBombon from_epsilons(const RVector& eps, const Tolerance& tol = {});
Evaluation evaluate(const QuadricBombon& x, const ProjPoint& p);
Subspace singular_locus(const QuadricBombon& x);
BombonType bombon_type(const QuadricBombon& x);

/// C_U (positive eigenvectors) and C_V (negative eigenvectors). The side
/// labels follow the sign of the form, not the p <= q ordering.
struct Cores {
  Subspace c_u;
  Subspace c_v;
};
Cores cores(const QuadricBombon& x);

struct CanonicalForm {
  BombonType type;
  CongruenceWitness witness;
  /// diag(I_{p+1}, -I_{q+1}, 0_{k+1}) that T* (sign * A) T reproduces.
  HermitianMatrix canonical;
};

/// T with T* (sign A) T = diag(I_{p+1}, -I_{q+1}, 0); sign = -1 when A has
/// more positive than negative eigenvalues.
CanonicalForm canonical_form(const QuadricBombon& x);

/// Witness T with T* A T = lambda B (lambda = +/- |A|_F / |B|_F). Throws
/// TypeMismatch when the bombon types differ.
CongruenceWitness equivalence_witness(const QuadricBombon& x, const QuadricBombon& y);

/// Join with apex: `gamma_basis` (columns, in ambient coordinates) spans the
/// subspace carrying X, whose form is written in those coordinates. The
/// apex must be complementary to it.
QuadricBombon join_with_apex(const QuadricBombon& x, const CMatrix& gamma_basis, const Subspace& apex);

SpecialClass classify_special(const QuadricBombon& x);
SpecialClass classify_special(const BombonType& t);

}  // namespace bombon

#pragma once

// The circle action x -> P_pos x + e^{i theta} P_neg x on a smooth quadric
// bombon and pseudo-unitary transport between any two of its points.

#include <utility>

#include "bombon/quadric.hpp"

namespace bombon {

/// Orthogonal projectors onto the positive and negative eigenspaces of A.
struct CoreSplit {
  CMatrix p_pos;
  CMatrix p_neg;
};

/// Throws NotSmooth when A has a kernel.
CoreSplit core_split(const QuadricBombon& x);

/// The linear map P_pos + e^{i theta} P_neg; it preserves the form exactly
/// because P_pos A P_neg = 0.
CMatrix s1_action_matrix(const CoreSplit& split, double theta);
CVector s1_action(const QuadricBombon& x, const CoreSplit& split, double theta, const CVector& v);

/// ([P_pos x], [P_neg x]) for x on X; the orbit of x lies on the line they span.
std::pair<ProjPoint, ProjPoint> bundle_projection(const QuadricBombon& x, const CoreSplit& split,
                                                  const CVector& v);

struct TransportWitness {
  CMatrix T;
  double residual = 0.0;  ///< |T* A T - A|_inf
};

/// Pseudo-unitary T with [T x] = [y], by extending x -> y across hyperbolic
/// pairs (x, f), (y, g) and matching the A-orthogonal complements through
/// their canonical congruences.
TransportWitness homogeneity_transport(const QuadricBombon& x, const ProjPoint& from, const ProjPoint& to);

/// |T* A T - A|_inf <= tol * |A|_inf.
bool pseudo_unitary_check(const CMatrix& t, const HermitianMatrix& a, double tol);

}  // namespace bombon

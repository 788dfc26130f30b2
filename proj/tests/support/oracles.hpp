#pragma once

// Brute-force reference computations used to cross-check the library. None
// of them call into the code under test beyond plain data types.

#include <string>
#include <vector>

#include "bombon/projective.hpp"

namespace oracle {

using bombon::CMatrix;
using bombon::Complex;
using bombon::CVector;

enum class GridTag { Empty, SinglePoint, Circle, FullLine, LowConfidence };
std::string to_string(GridTag t);

/// Shape of {x on the line : x* A x = 0}, found by evaluating the form on a
/// 128-point Fibonacci grid of the line's CP^1 followed by a pattern search
/// for its extreme values. Decisions use 1e-6 |A|_inf; extremes whose size
/// falls in [1e-7, 1e-5] |A|_inf are reported as LowConfidence.
GridTag grid_line_tag(const CMatrix& a, const CMatrix& basis);

/// Number of strictly positive, strictly negative and near-zero eigenvalues
/// of a Hermitian matrix, from Eigen's tridiagonal QR solver.
struct Counts {
  int pos = 0;
  int neg = 0;
  int zero = 0;
};
Counts eigen_counts(const CMatrix& a, double rel_tol = 1e-9);

/// Largest dimension of a subspace on which the form is positive, estimated
/// from below by random k-frames: returns the largest k for which some
/// sampled frame restricts to a positive definite form.
int sampled_positive_index(const CMatrix& a, int frames, unsigned seed);

/// Coefficients (alpha, beta, delta) of alpha |z|^2 + 2 Re(conj(beta) z) + delta
/// vanishing at three finite points, via a real 4x4 null space.
struct RealCircle {
  double alpha;
  Complex beta;
  double delta;
};
RealCircle circle_through_finite(Complex z1, Complex z2, Complex z3);

/// |u - v (v* u)| for unit u, v: sine of the angle between two complex lines.
double line_sine(const CVector& u, const CVector& v);

/// Infinity norm computed without library helpers.
double max_row_sum(const CMatrix& m);

}  // namespace oracle

#pragma once

// Seeded sampling. Every generator is passed explicitly; nothing here keeps
// global state.

#include <cstdint>
#include <random>

#include "bombon/hermitian.hpp"

namespace bombon {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
Complex complex_gaussian(Rng& rng);
CVector gaussian_vector(Rng& rng, Eigen::Index size);
CMatrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
double uniform(Rng& rng, double lo, double hi);

/// Canonicalized point from i.i.d. complex Gaussian coordinates, i.e. the
/// unitarily invariant measure on CP^n.
ProjPoint sample_point(Rng& rng, int n);

/// Haar-distributed unitary (QR of a Gaussian matrix with phase correction).
CMatrix random_unitary(Rng& rng, Eigen::Index size);

/// U diag(s) V* with singular values log-uniform in [1, max_condition].
CMatrix random_invertible(Rng& rng, Eigen::Index size, double max_condition = 1e3);

/// T* diag(d) T with d holding n_pos entries in [0.5, 2], n_neg in [-2, -0.5]
/// and n_zero zeros, T from random_invertible.
HermitianMatrix random_hermitian_with_counts(Rng& rng, int n_pos, int n_neg, int n_zero,
                                             double max_condition = 1e3);

/// Random counts with n_pos >= 1, n_neg >= 1 and total size n + 1.
struct SignatureCounts {
  int n_pos;
  int n_neg;
  int n_zero;
};
SignatureCounts random_mixed_counts(Rng& rng, int n, bool allow_kernel = true);

/// Dense Hermitian matrix with i.i.d. Gaussian entries (GUE-like).
HermitianMatrix random_hermitian(Rng& rng, Eigen::Index size);

}  // namespace bombon

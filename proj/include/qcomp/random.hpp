#pragma once

// Seeded generators for randomized law checks. Every campaign takes an
// explicit generator; nothing here touches global state.

#include <cstdint>
#include <random>

#include "qcomp/hilbert.hpp"

namespace qcomp {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; gives independent per-trial seeds from (seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline Eigen::Index uniform_index(Rng& rng, Eigen::Index lo, Eigen::Index hi) {
  return std::uniform_int_distribution<Eigen::Index>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Complex Gaussian entries.
inline Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline Vector random_vector(Eigen::Index n, Rng& rng) { return random_matrix(n, 1, rng).col(0); }

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of R's
/// diagonal divided out.
inline Matrix random_unitary(Eigen::Index n, Rng& rng) {
  Matrix z = random_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

inline Subspace random_subspace(Eigen::Index n, Eigen::Index rank, Rng& rng, double tol = kDefaultTol) {
  return Subspace::from_orthonormal(random_unitary(n, rng).leftCols(rank), tol);
}

/// A random subspace of A of the given rank (rank <= A.rank()).
inline Subspace random_subspace_within(const Subspace& A, Eigen::Index rank, Rng& rng) {
  if (rank == 0) return Subspace::zero(A.ambient_dim(), A.tol());
  Matrix inner = random_unitary(A.rank(), rng).leftCols(rank);
  return Subspace::from_orthonormal(A.frame() * inner, A.tol());
}

/// Density matrix of the given rank supported inside `support`, with
/// eigenvalues drawn from [0.1, 1] before normalization.
inline Matrix random_density_matrix(const Subspace& support, Eigen::Index rank, Rng& rng) {
  const auto n = support.ambient_dim();
  Matrix rho = Matrix::Zero(n, n);
  if (rank == 0 || support.rank() == 0) return rho;
  Matrix vs = support.frame() * random_unitary(support.rank(), rng).leftCols(rank);
  double total = 0.0;
  for (Eigen::Index k = 0; k < rank; ++k) {
    const double w = uniform_real(rng, 0.1, 1.0);
    total += w;
    rho += w * vs.col(k) * vs.col(k).adjoint();
  }
  return rho / total;
}

}  // namespace qcomp

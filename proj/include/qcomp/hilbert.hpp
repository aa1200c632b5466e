#pragma once

// Subspaces of C^n as an implicit orthomodular lattice. A Subspace keeps an
// orthonormal frame (one column per dimension, zero columns for the zero
// subspace) and the tolerance that decided its rank.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "qcomp/error.hpp"

namespace qcomp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Relative tolerance for every rank decision in the library.
inline constexpr double kDefaultTol = 1e-9;

inline bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

class Subspace {
 public:
  static Subspace zero(Eigen::Index n, double tol = kDefaultTol) { return Subspace(Matrix(n, 0), tol); }
  static Subspace full(Eigen::Index n, double tol = kDefaultTol) {
    return Subspace(Matrix::Identity(n, n), tol);
  }

  /// Trusts that `frame` already has orthonormal columns.
  static Subspace from_orthonormal(Matrix frame, double tol = kDefaultTol) {
    return Subspace(std::move(frame), tol);
  }

  Eigen::Index ambient_dim() const noexcept { return frame_.rows(); }
  Eigen::Index rank() const noexcept { return frame_.cols(); }
  const Matrix& frame() const noexcept { return frame_; }
  double tol() const noexcept { return tol_; }
  bool is_zero() const noexcept { return rank() == 0; }

  Matrix projector() const { return frame_ * frame_.adjoint(); }

  /// Frobenius norm of the difference of the two projectors.
  double distance(const Subspace& other) const {
    require_same_dim(other);
    return (projector() - other.projector()).norm();
  }

  bool approx_equal(const Subspace& other, double tol) const { return distance(other) <= tol; }
  bool approx_equal(const Subspace& other) const {
    return approx_equal(other, std::max(tol_, other.tol_));
  }

  /// ‖(I − P_other) frame‖_F: zero exactly when this ⊆ other.
  double containment_gap(const Subspace& other) const {
    require_same_dim(other);
    if (rank() == 0) return 0.0;
    Matrix residual = frame_ - other.frame_ * (other.frame_.adjoint() * frame_);
    return residual.norm();
  }

  bool leq(const Subspace& other, double tol) const { return containment_gap(other) <= tol; }
  bool leq(const Subspace& other) const { return leq(other, std::max(tol_, other.tol_)); }

  void require_same_dim(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim())
      throw Error(ErrorKind::DimensionMismatch, "subspaces of C^" + std::to_string(ambient_dim()) +
                                                    " and C^" + std::to_string(other.ambient_dim()));
  }

 private:
  Subspace(Matrix frame, double tol) : frame_(std::move(frame)), tol_(tol) {}

  Matrix frame_;
  double tol_;
};

/// Column span. Singular values at or below tol·scale are dropped; `scale`
/// defaults to the largest singular value of `vectors`. Pass the norm of the
/// producing operator when the vectors are images, so that images of kernel
/// vectors (pure rounding noise) are not promoted to a ray.
inline Subspace span(const Matrix& vectors, double tol = kDefaultTol, std::optional<double> scale = std::nullopt) {
  if (vectors.rows() == 0) throw Error(ErrorKind::BadShape, "vectors must have at least one row");
  if (!all_finite(vectors)) throw Error(ErrorKind::NonFinite, "span input has NaN or Inf");
  if (vectors.cols() == 0) return Subspace::zero(vectors.rows(), tol);
  Eigen::JacobiSVD<Matrix> svd(vectors, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  const double ref = scale.value_or(smax);
  if (smax == 0.0 || ref == 0.0) return Subspace::zero(vectors.rows(), tol);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > tol * ref) ++r;
  return Subspace::from_orthonormal(svd.matrixU().leftCols(r), tol);
}

inline Subspace ray(const Vector& v, double tol = kDefaultTol) {
  Matrix m = v;
  return span(m, tol);
}

/// Unit vector e_k in C^n.
inline Vector basis_vector(Eigen::Index n, Eigen::Index k) {
  Vector e = Vector::Zero(n);
  e(k) = 1.0;
  return e;
}

/// Intersection: kernel of (I − P_A) + (I − P_B). That operator is PSD with
/// largest eigenvalue 0 or in [1, 2], so the threshold is effectively absolute.
inline Subspace meet_s(const Subspace& A, const Subspace& B) {
  A.require_same_dim(B);
  const double tol = std::max(A.tol(), B.tol());
  const auto n = A.ambient_dim();
  Matrix I = Matrix::Identity(n, n);
  Matrix M = (I - A.projector()) + (I - B.projector());
  M = (M + M.adjoint()).eval() * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(M);
  const auto& ev = es.eigenvalues();  // ascending
  const double scale = std::max(1.0, ev(n - 1));
  Eigen::Index k = 0;
  while (k < n && ev(k) <= tol * scale) ++k;
  return Subspace::from_orthonormal(es.eigenvectors().leftCols(k), tol);
}

inline Subspace join_s(const Subspace& A, const Subspace& B) {
  A.require_same_dim(B);
  const double tol = std::max(A.tol(), B.tol());
  Matrix both(A.ambient_dim(), A.rank() + B.rank());
  both << A.frame(), B.frame();
  return span(both, tol);
}

inline Subspace ortho_s(const Subspace& A) {
  const auto n = A.ambient_dim();
  const auto r = A.rank();
  if (r == 0) return Subspace::full(n, A.tol());
  if (r == n) return Subspace::zero(n, A.tol());
  Eigen::HouseholderQR<Matrix> qr(A.frame());
  Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
  return Subspace::from_orthonormal(Q.rightCols(n - r), A.tol());
}

inline Matrix projector(const Subspace& A) { return A.projector(); }

/// Sasaki projection of B onto A by the lattice formula A ∧ (B ∨ A⊥).
inline Subspace sasaki_formula(const Subspace& A, const Subspace& B) {
  return meet_s(A, join_s(B, ortho_s(A)));
}

/// Sasaki projection of B onto A as the image P_A(B).
inline Subspace sasaki_image(const Subspace& A, const Subspace& B) {
  A.require_same_dim(B);
  const double tol = std::max(A.tol(), B.tol());
  if (B.is_zero()) return Subspace::zero(A.ambient_dim(), tol);
  return span(A.projector() * B.frame(), tol);
}

/// Both routes are computed; disagreement beyond tol raises CrossCheckFailed.
inline Subspace sasaki_s(const Subspace& A, const Subspace& B) {
  Subspace by_formula = sasaki_formula(A, B);
  Subspace by_image = sasaki_image(A, B);
  const double tol = std::max(A.tol(), B.tol());
  const double d = by_formula.distance(by_image);
  if (d > tol)
    throw Error(ErrorKind::CrossCheckFailed, "Sasaki routes differ by " + std::to_string(d));
  return by_image;
}

}  // namespace qcomp

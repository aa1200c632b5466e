#pragma once

// Atomic states of compoundness represented by linear or anti-linear
// operators H1 -> H2, and their correspondence with tensor coefficients.
//
// An anti-linear operator is stored as (M, antilinear) and acts as
// v ↦ M·conj(v). With fixed orthonormal bases {ψ_i}, {φ_i}:
//   linear:      Σ c_i ⟨ψ_i|−⟩ φ_i   has matrix Σ c_i φ_i ψ_iᴴ
//   anti-linear: Σ c_i ⟨−|ψ_i⟩ φ_i   has matrix Σ c_i φ_i ψ_iᵀ
// and the anti-linear form is the one that corresponds to the vector
// Σ c_i ψ_i ⊗ φ_i of H1 ⊗ H2.

#include <optional>
#include <string>
#include <vector>

#include "qcomp/density.hpp"
#include "qcomp/hilbert.hpp"
#include "qcomp/random.hpp"

namespace qcomp {

enum class Linearity { linear, antilinear };

inline std::string to_string(Linearity l) { return l == Linearity::linear ? "linear" : "antilinear"; }

class CompoundOperator {
 public:
  CompoundOperator(Matrix m, Linearity lin) : m_(std::move(m)), lin_(lin) {
    if (m_.rows() == 0 || m_.cols() == 0) throw Error(ErrorKind::BadShape, "operator must be non-empty");
    if (!all_finite(m_)) throw Error(ErrorKind::NonFinite, "operator has NaN or Inf");
  }

  static CompoundOperator identity(Eigen::Index n, Linearity lin = Linearity::linear) {
    return CompoundOperator(Matrix::Identity(n, n), lin);
  }

  const Matrix& matrix() const noexcept { return m_; }
  Linearity linearity() const noexcept { return lin_; }
  bool is_antilinear() const noexcept { return lin_ == Linearity::antilinear; }
  Eigen::Index dim_in() const noexcept { return m_.cols(); }
  Eigen::Index dim_out() const noexcept { return m_.rows(); }

  Vector apply(const Vector& v) const {
    if (v.size() != dim_in())
      throw Error(ErrorKind::BadShape, "vector of length " + std::to_string(v.size()) + " for an operator on C^" +
                                           std::to_string(dim_in()));
    return is_antilinear() ? Vector(m_ * v.conjugate()) : Vector(m_ * v);
  }

  /// Column-wise action on a frame.
  Matrix apply(const Matrix& vs) const {
    if (vs.rows() != dim_in()) throw Error(ErrorKind::BadShape, "frame has the wrong number of rows");
    return is_antilinear() ? Matrix(m_ * vs.conjugate()) : Matrix(m_ * vs);
  }

  /// Linear case: Mᴴ. Anti-linear case: Mᵀ, since ⟨φ, M·conj(ψ)⟩ = ⟨ψ, Mᵀ·conj(φ)⟩.
  CompoundOperator adjoint() const {
    return is_antilinear() ? CompoundOperator(m_.transpose(), lin_) : CompoundOperator(m_.adjoint(), lin_);
  }

  bool is_zero() const noexcept { return m_.norm() == 0.0; }

 private:
  Matrix m_;
  Linearity lin_;
};

/// (A ∘ B)(v) = A(B(v)); anti-linear iff exactly one factor is.
inline CompoundOperator compose(const CompoundOperator& A, const CompoundOperator& B) {
  if (A.dim_in() != B.dim_out()) throw Error(ErrorKind::BadShape, "compose: inner dimensions differ");
  Matrix m = A.is_antilinear() ? Matrix(A.matrix() * B.matrix().conjugate()) : Matrix(A.matrix() * B.matrix());
  Linearity lin = (A.is_antilinear() != B.is_antilinear()) ? Linearity::antilinear : Linearity::linear;
  return CompoundOperator(std::move(m), lin);
}

inline Vector apply(const CompoundOperator& F, const Vector& v) { return F.apply(v); }

inline double hs_norm(const CompoundOperator& F) { return F.matrix().norm(); }

/// Lattice map A ↦ span(F·frame(A)), with rank judged against ‖F‖.
inline Subspace induced_map(const CompoundOperator& F, const Subspace& A) {
  if (A.ambient_dim() != F.dim_in())
    throw Error(ErrorKind::DimensionMismatch, "subspace of C^" + std::to_string(A.ambient_dim()) +
                                                  " for an operator on C^" + std::to_string(F.dim_in()));
  if (A.is_zero()) return Subspace::zero(F.dim_out(), A.tol());
  // The frame is orthonormal, so ‖F‖_F bounds every image length.
  return span(F.apply(A.frame()), A.tol(), hs_norm(F));
}

/// Σ c_i ψ_i ⊗ φ_i with orthonormal families {ψ_i} ⊂ H1 and {φ_i} ⊂ H2 stored
/// as frame columns.
struct TensorVector {
  Vector coefficients;
  Matrix left_basis;
  Matrix right_basis;

  Eigen::Index terms() const noexcept { return coefficients.size(); }
  Eigen::Index left_dim() const noexcept { return left_basis.rows(); }
  Eigen::Index right_dim() const noexcept { return right_basis.rows(); }
};

inline double orthonormality_error(const Matrix& frame) {
  return (frame.adjoint() * frame - Matrix::Identity(frame.cols(), frame.cols())).norm();
}

inline void validate(const TensorVector& tv, double tol = kDefaultTol) {
  const auto m = tv.terms();
  if (tv.left_basis.cols() != m || tv.right_basis.cols() != m)
    throw Error(ErrorKind::BadShape, "coefficient count must match both basis sizes");
  if (m == 0 || tv.left_basis.rows() == 0 || tv.right_basis.rows() == 0)
    throw Error(ErrorKind::BadShape, "tensor vector needs at least one term and nonzero dimensions");
  if (!all_finite(tv.coefficients) || !all_finite(tv.left_basis) || !all_finite(tv.right_basis))
    throw Error(ErrorKind::NonFinite, "tensor vector has NaN or Inf");
  if (orthonormality_error(tv.left_basis) > tol) throw Error(ErrorKind::BadBasis, "left basis is not orthonormal");
  if (orthonormality_error(tv.right_basis) > tol) throw Error(ErrorKind::BadBasis, "right basis is not orthonormal");
}

inline CompoundOperator from_tensor(const TensorVector& tv, Linearity lin) {
  validate(tv);
  const Matrix& left = tv.left_basis;
  Matrix pairing = lin == Linearity::linear ? Matrix(left.adjoint()) : Matrix(left.transpose());
  return CompoundOperator(tv.right_basis * tv.coefficients.asDiagonal() * pairing, lin);
}

/// Coefficients of F in the given bases: c_i = ⟨φ_i | F ψ_i⟩. F must be
/// diagonal in that pairing, otherwise NotRepresentable.
inline TensorVector to_tensor(const CompoundOperator& F, const Matrix& left_basis, const Matrix& right_basis,
                              double tol = kDefaultTol) {
  if (left_basis.rows() != F.dim_in() || right_basis.rows() != F.dim_out())
    throw Error(ErrorKind::BadShape, "basis dimensions do not match the operator");
  TensorVector tv{Vector(left_basis.cols()), left_basis, right_basis};
  Matrix images = F.apply(left_basis);
  for (Eigen::Index i = 0; i < tv.terms(); ++i) tv.coefficients(i) = right_basis.col(i).dot(images.col(i));
  validate(tv);
  const double residual = (from_tensor(tv, F.linearity()).matrix() - F.matrix()).norm();
  if (residual > tol * std::max(1.0, F.matrix().norm()))
    throw Error(ErrorKind::NotRepresentable,
                "operator is not diagonal in the given bases (residual " + std::to_string(residual) + ")");
  return tv;
}

/// Computational bases truncated to min(dim_in, dim_out) terms.
inline TensorVector to_tensor(const CompoundOperator& F, double tol = kDefaultTol) {
  const auto m = std::min(F.dim_in(), F.dim_out());
  return to_tensor(F, Matrix::Identity(F.dim_in(), m), Matrix::Identity(F.dim_out(), m), tol);
}

/// Schmidt form of any operator via its SVD; terms are the nonzero singular values.
inline TensorVector schmidt_tensor(const CompoundOperator& F, double tol = kDefaultTol) {
  Eigen::JacobiSVD<Matrix> svd(F.matrix(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  const double smax = s.size() ? s(0) : 0.0;
  while (r < s.size() && s(r) > tol * smax) ++r;
  if (r == 0) throw Error(ErrorKind::ZeroOperator, "zero operator has no Schmidt form");
  TensorVector tv;
  tv.coefficients = s.head(r).cast<Complex>();
  tv.right_basis = svd.matrixU().leftCols(r);
  // F = U Σ Vᴴ. Linear pairing uses ψ_i = v_i; anti-linear pairing needs ψ_iᵀ = v_iᴴ.
  tv.left_basis = F.is_antilinear() ? Matrix(svd.matrixV().leftCols(r).conjugate()) : Matrix(svd.matrixV().leftCols(r));
  return tv;
}

/// Kronecker vector Σ c_i ψ_i ⊗ φ_i in C^{d1·d2}, index i1·d2 + i2.
inline Vector kron_vector(const TensorVector& tv) {
  const auto d1 = tv.left_dim(), d2 = tv.right_dim();
  Vector out = Vector::Zero(d1 * d2);
  for (Eigen::Index t = 0; t < tv.terms(); ++t)
    for (Eigen::Index i = 0; i < d1; ++i)
      out.segment(i * d2, d2) += tv.coefficients(t) * tv.left_basis(i, t) * tv.right_basis.col(t);
  return out;
}

/// Tensor-space norm ‖c‖₂.
inline double tensor_norm(const TensorVector& tv) { return tv.coefficients.norm(); }

struct Quadruple {
  CompoundOperator f12;
  DensityState rho1;
  DensityState rho2;
  CompoundOperator f21;
};

/// (F, F†F / Tr, F F† / Tr, F†).
inline Quadruple quadruple(const CompoundOperator& F) {
  if (F.is_zero()) throw Error(ErrorKind::ZeroOperator, "quadruple of the zero operator");
  CompoundOperator Fd = F.adjoint();
  Matrix a = compose(Fd, F).matrix();
  Matrix b = compose(F, Fd).matrix();
  return Quadruple{F, DensityState::normalized(a), DensityState::normalized(b), Fd};
}

enum class WitnessKind { none, not_below, not_equal };

struct ProbeReport {
  std::size_t rays_tested = 0;
  bool f_is_zero = false;
  bool below_on_samples = true;  ///< f(r) ⊆ g(r) for every sampled ray
  bool equal_on_samples = true;  ///< f(r) = g(r) for every sampled ray
  bool consistent_with_prop1 = true;
  WitnessKind witness_kind = WitnessKind::none;
  std::optional<Vector> witness;
};

/// Sampled check of "f ≤ g with f, g sending atoms to atoms or 0 forces f = 0
/// or f = g". Probes the computational basis, kernel bases of F and G, then
/// `ray_samples` random rays. A counterexample would be f ≠ 0, f ≤ g on all
/// rays and f ≠ g on some ray.
inline ProbeReport atomicity_probe(const CompoundOperator& F, const CompoundOperator& G, std::size_t ray_samples,
                                   Rng& rng, double tol = kDefaultTol) {
  if (F.dim_in() != G.dim_in() || F.dim_out() != G.dim_out())
    throw Error(ErrorKind::DimensionMismatch, "atomicity_probe needs operators of the same shape");
  const auto n = F.dim_in();
  std::vector<Vector> probes;
  for (Eigen::Index k = 0; k < n; ++k) probes.push_back(basis_vector(n, k));
  for (const auto* op : {&F, &G}) {
    Eigen::JacobiSVD<Matrix> svd(op->matrix(), Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > tol * smax) ++r;
    for (Eigen::Index k = r; k < n; ++k) {
      Vector v = svd.matrixV().col(k);
      // ker(M·conj(·)) is the conjugate of ker M.
      probes.push_back(op->is_antilinear() ? Vector(v.conjugate()) : v);
    }
  }
  for (std::size_t k = 0; k < ray_samples; ++k) probes.push_back(random_vector(n, rng));

  ProbeReport rep;
  rep.f_is_zero = hs_norm(F) <= tol * std::max(1.0, hs_norm(G));
  std::optional<Vector> unequal;
  for (const auto& v : probes) {
    Subspace r = ray(v, tol);
    Subspace fr = induced_map(F, r);
    Subspace gr = induced_map(G, r);
    ++rep.rays_tested;
    if (!fr.leq(gr)) {
      if (rep.below_on_samples) {
        rep.witness_kind = WitnessKind::not_below;
        rep.witness = v;
      }
      rep.below_on_samples = false;
    }
    if (!fr.approx_equal(gr)) {
      rep.equal_on_samples = false;
      if (!unequal) unequal = v;
    }
  }
  if (rep.below_on_samples && !rep.f_is_zero && !rep.equal_on_samples) {
    rep.consistent_with_prop1 = false;
    rep.witness_kind = WitnessKind::not_equal;
    rep.witness = unequal;
  }
  return rep;
}

}  // namespace qcomp

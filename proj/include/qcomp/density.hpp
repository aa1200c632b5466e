#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "qcomp/hilbert.hpp"

namespace qcomp {

struct DensityTolerance {
  double hermitian = 1e-12;
  double min_eigenvalue = -1e-10;
  double trace = 1e-12;
};

/// How far a matrix is from being a density operator.
struct DensityDiagnostics {
  double hermitian_error = 0.0;  ///< ‖ρ − ρ†‖_F
  double min_eigenvalue = 0.0;
  double trace_error = 0.0;  ///< |Tr ρ − 1|

  bool ok(const DensityTolerance& t = {}) const {
    return hermitian_error <= t.hermitian && min_eigenvalue >= t.min_eigenvalue && trace_error <= t.trace;
  }
};

inline DensityDiagnostics diagnose_density(const Matrix& m) {
  DensityDiagnostics d;
  d.hermitian_error = (m - m.adjoint()).norm();
  Matrix h = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().size() ? es.eigenvalues()(0) : 0.0;
  d.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  return d;
}

class DensityState {
 public:
  /// Validates against the density-operator invariants.
  explicit DensityState(Matrix m, const DensityTolerance& t = {}) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0)
      throw Error(ErrorKind::BadShape, "density operator must be square");
    if (!all_finite(m_)) throw Error(ErrorKind::NonFinite, "density operator has NaN or Inf");
    auto d = diagnose_density(m_);
    if (!d.ok(t))
      throw Error(ErrorKind::PreconditionViolated,
                  "not a density operator (hermitian error " + std::to_string(d.hermitian_error) +
                      ", min eigenvalue " + std::to_string(d.min_eigenvalue) + ", trace error " +
                      std::to_string(d.trace_error) + ")");
  }

  /// Hermitian part of a nonzero PSD matrix, scaled to unit trace.
  static DensityState normalized(const Matrix& m) {
    Matrix h = (m + m.adjoint()) * 0.5;
    const double tr = h.trace().real();
    if (!(tr > 0.0)) throw Error(ErrorKind::ZeroOperator, "cannot normalize a traceless matrix");
    return DensityState(h / tr);
  }

  static DensityState pure(const Vector& v) {
    const double nn = v.squaredNorm();
    if (nn == 0.0) throw Error(ErrorKind::ZeroVector, "pure state of the zero vector");
    return DensityState(v * v.adjoint() / nn);
  }

  const Matrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }

 private:
  Matrix m_;
};

}  // namespace qcomp

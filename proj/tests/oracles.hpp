#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code paths with the library: orders are read through leq() alone, subspaces
// through plain Gram-Schmidt, tensors through explicit index loops.

#include <complex>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "qcomp/qcomp.hpp"

namespace oracle {

using qcomp::Element;
using qcomp::FiniteLattice;

/// Least upper bound of a set by scanning every candidate; nullopt if none.
inline std::optional<Element> lub(const FiniteLattice& L, const std::vector<Element>& xs) {
  std::vector<Element> ubs;
  for (Element u = 0; u < L.size(); ++u) {
    bool upper = true;
    for (Element x : xs) upper = upper && L.leq(x, u);
    if (upper) ubs.push_back(u);
  }
  for (Element u : ubs) {
    bool least = true;
    for (Element v : ubs) least = least && L.leq(u, v);
    if (least) return u;
  }
  return std::nullopt;
}

inline std::optional<Element> glb(const FiniteLattice& L, const std::vector<Element>& xs) {
  std::vector<Element> lbs;
  for (Element u = 0; u < L.size(); ++u) {
    bool lower = true;
    for (Element x : xs) lower = lower && L.leq(u, x);
    if (lower) lbs.push_back(u);
  }
  for (Element u : lbs) {
    bool greatest = true;
    for (Element v : lbs) greatest = greatest && L.leq(v, u);
    if (greatest) return u;
  }
  return std::nullopt;
}

/// Every table L1 -> L2 that preserves the empty join and binary joins,
/// found by trying all |L2|^|L1| tables.
inline std::vector<std::vector<Element>> join_maps(const FiniteLattice& L1, const FiniteLattice& L2) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> t(L1.size(), 0);
  while (true) {
    bool ok = t[L1.bottom()] == L2.bottom();
    for (Element a = 0; ok && a < L1.size(); ++a)
      for (Element b = 0; ok && b < L1.size(); ++b) ok = t[*lub(L1, {a, b})] == *lub(L2, {t[a], t[b]});
    if (ok) out.push_back(t);
    std::size_t k = 0;
    while (k < t.size() && ++t[k] == L2.size()) t[k++] = 0;
    if (k == t.size()) break;
  }
  return out;
}

/// f*(b) as the greatest a with f(a) <= b, by direct search.
inline std::vector<Element> dual(const FiniteLattice& L1, const FiniteLattice& L2, const std::vector<Element>& f) {
  std::vector<Element> g(L2.size());
  for (Element b = 0; b < L2.size(); ++b) {
    std::vector<Element> pre;
    for (Element a = 0; a < L1.size(); ++a)
      if (L2.leq(f[a], b)) pre.push_back(a);
    g[b] = *lub(L1, pre);
  }
  return g;
}

/// Atoms as elements whose only strict lower bound is bottom.
inline std::set<Element> atoms(const FiniteLattice& L) {
  std::set<Element> out;
  for (Element a = 0; a < L.size(); ++a) {
    if (a == L.bottom()) continue;
    bool atom = true;
    for (Element x = 0; x < L.size(); ++x)
      if (x != a && x != L.bottom() && L.leq(x, a)) atom = false;
    if (atom) out.insert(a);
  }
  return out;
}

// ---- linear algebra -------------------------------------------------------

using qcomp::Complex;
using qcomp::Matrix;
using qcomp::Vector;

/// Orthonormal basis of the column span by modified Gram-Schmidt with an
/// absolute cut on the residual norm.
inline Matrix gram_schmidt(const Matrix& vs, double cut = 1e-8) {
  std::vector<Vector> basis;
  for (Eigen::Index j = 0; j < vs.cols(); ++j) {
    Vector v = vs.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) v -= q * q.dot(v);
    const double n = v.norm();
    if (n > cut) basis.push_back(v / n);
  }
  Matrix out(vs.rows(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = basis[k];
  return out;
}

inline Matrix proj(const Matrix& orthonormal) { return orthonormal * orthonormal.adjoint(); }

/// Projector onto A + B from concatenated frames.
inline Matrix join_projector(const Matrix& A, const Matrix& B) {
  Matrix both(A.rows(), A.cols() + B.cols());
  both << A, B;
  return proj(gram_schmidt(both));
}

/// Σ_i c_i ψ_i ⊗ φ_i as an explicit d1·d2 vector, index (i1, i2) -> i1·d2 + i2.
inline Vector kron(const qcomp::TensorVector& tv) {
  const auto d1 = tv.left_basis.rows(), d2 = tv.right_basis.rows();
  Vector out = Vector::Zero(d1 * d2);
  for (Eigen::Index k = 0; k < tv.coefficients.size(); ++k)
    for (Eigen::Index i1 = 0; i1 < d1; ++i1)
      for (Eigen::Index i2 = 0; i2 < d2; ++i2)
        out(i1 * d2 + i2) += tv.coefficients(k) * tv.left_basis(i1, k) * tv.right_basis(i2, k);
  return out;
}

inline double born(const qcomp::TensorVector& tv, const Vector& psi, const Vector& phi) {
  Vector state = kron(tv);
  const auto d2 = phi.size();
  Complex amp = 0;
  for (Eigen::Index i1 = 0; i1 < psi.size(); ++i1)
    for (Eigen::Index i2 = 0; i2 < d2; ++i2) amp += std::conj(psi(i1) * phi(i2)) * state(i1 * d2 + i2);
  return std::norm(amp) / (psi.squaredNorm() * phi.squaredNorm() * state.squaredNorm());
}

// ---- proper-state spaces --------------------------------------------------

/// Membership written with std::set: for every T, f(cl T) ⊆ cl f(T), where
/// cl T = {p | c(p) <= ⋁ c(T)}.
struct SetSpace {
  const FiniteLattice* L;
  std::vector<Element> c;

  Element C(const std::set<std::size_t>& T) const {
    std::vector<Element> xs;
    for (auto p : T) xs.push_back(c[p]);
    return *lub(*L, xs);
  }
  std::set<std::size_t> cl(const std::set<std::size_t>& T) const {
    std::set<std::size_t> out;
    const Element x = C(T);
    for (std::size_t p = 0; p < c.size(); ++p)
      if (L->leq(c[p], x)) out.insert(p);
    return out;
  }
  std::set<std::size_t> apply(const std::vector<std::set<std::size_t>>& f, const std::set<std::size_t>& T) const {
    std::set<std::size_t> out;
    for (auto p : T) out.insert(f[p].begin(), f[p].end());
    return out;
  }
  bool member(const std::vector<std::set<std::size_t>>& f) const {
    const std::size_t n = c.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::set<std::size_t> T;
      for (std::size_t p = 0; p < n; ++p)
        if (mask >> p & 1) T.insert(p);
      auto lhs = apply(f, cl(T));
      auto rhs = cl(apply(f, T));
      for (auto p : lhs)
        if (!rhs.count(p)) return false;
    }
    return true;
  }
};

inline std::vector<std::set<std::size_t>> to_sets(const qcomp::TransitionMap& f) {
  std::vector<std::set<std::size_t>> out;
  for (auto m : f.images()) {
    std::set<std::size_t> s;
    for (std::size_t p = 0; p < 32; ++p)
      if (m >> p & 1) s.insert(p);
    out.push_back(s);
  }
  return out;
}

}  // namespace oracle

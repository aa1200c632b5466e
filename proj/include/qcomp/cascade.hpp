#pragma once

// Proper states as density operators, Lüders transitions, and the
// measurement cascade that alternates collapse on one side with property
// induction on the other.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qcomp/compound.hpp"
#include "qcomp/density.hpp"
#include "qcomp/hilbert.hpp"
#include "qcomp/random.hpp"

namespace qcomp {

/// Range of ρ: eigenvectors with eigenvalue above tol·λ_max.
inline Subspace carrier(const DensityState& rho, double tol = kDefaultTol) {
  Matrix h = (rho.matrix() + rho.matrix().adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& ev = es.eigenvalues();
  const auto n = ev.size();
  const double lmax = ev(n - 1);
  if (!(lmax > 0.0)) return Subspace::zero(n, tol);
  Eigen::Index first = n;
  while (first > 0 && ev(first - 1) > tol * lmax) --first;
  return Subspace::from_orthonormal(es.eigenvectors().rightCols(n - first), tol);
}

inline void require_dims(const DensityState& rho, const Subspace& a) {
  if (rho.dim() != a.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "state on C^" + std::to_string(rho.dim()) + ", property in C^" +
                                                  std::to_string(a.ambient_dim()));
}

/// Tr(P_a ρ P_a), clamped to [0, 1].
inline double transition_probability(const DensityState& rho, const Subspace& a) {
  require_dims(rho, a);
  if (a.is_zero()) return 0.0;
  // Tr(P ρ P) = Tr(Fᴴ ρ F) for the frame F of a.
  const double p = (a.frame().adjoint() * rho.matrix() * a.frame()).trace().real();
  return std::clamp(p, 0.0, 1.0);
}

/// ρ ↦ P_a ρ P_a / Tr(P_a ρ P_a); empty when the outcome has probability at
/// or below tol (the orthogonal case).
inline std::optional<DensityState> lueders(const DensityState& rho, const Subspace& a) {
  require_dims(rho, a);
  const double tol = a.tol();
  if (transition_probability(rho, a) <= tol) return std::nullopt;
  Matrix P = a.projector();
  return DensityState::normalized(P * rho.matrix() * P);
}

enum class StepKind { measurement, induction };

inline std::string to_string(StepKind k) { return k == StepKind::measurement ? "measurement" : "induction"; }

struct CascadeStep {
  int side = 1;  ///< 1 or 2
  StepKind kind = StepKind::measurement;
  Subspace measured_property;  ///< the property made actual
  DensityState pre_state;
  std::optional<DensityState> post_state;
  double probability = 0.0;
  Subspace carrier_pre;
  Subspace carrier_post;  ///< carrier of post_state, zero if empty
  /// sasaki(carrier_pre, measured_property): the part of the new property that
  /// the previous strongest actual property supports. Always below carrier_pre.
  Subspace effective_property;
};

struct CascadeTrace {
  std::vector<CascadeStep> steps;
  double joint_probability = 0.0;
};

enum class CascadeOrder { left_first, right_first };

namespace detail {

inline CascadeStep make_step(int side, StepKind kind, const Subspace& a, const DensityState& pre, double tol) {
  auto post = lueders(pre, a);
  Subspace cpre = carrier(pre, tol);
  Subspace cpost = post ? carrier(*post, tol) : Subspace::zero(pre.dim(), tol);
  double p = kind == StepKind::measurement ? transition_probability(pre, a) : 1.0;
  if (!post) p = 0.0;
  return CascadeStep{side, kind, a, pre, post, p, cpre, cpost, sasaki_image(cpre, a)};
}

}  // namespace detail

/// Measures `first_atom` on the first side, induces the image of the collapsed
/// carrier on the other side through f12 (or f21), then measures `second_atom`
/// there. Joint probability is the product of the step probabilities; an
/// orthogonal outcome ends the cascade with probability 0.
inline CascadeTrace run_cascade(const CompoundOperator& F, const Subspace& left_atom, const Subspace& right_atom,
                                CascadeOrder order = CascadeOrder::left_first, double tol = kDefaultTol) {
  if (left_atom.rank() != 1 || right_atom.rank() != 1)
    throw Error(ErrorKind::PreconditionViolated, "cascade outcomes must be rays");
  Quadruple q = quadruple(F);
  const bool left = order == CascadeOrder::left_first;
  const CompoundOperator& induce = left ? q.f12 : q.f21;
  const DensityState& first_state = left ? q.rho1 : q.rho2;
  const DensityState& second_state = left ? q.rho2 : q.rho1;
  const Subspace& first_atom = left ? left_atom : right_atom;
  const Subspace& second_atom = left ? right_atom : left_atom;
  const int first_side = left ? 1 : 2;
  const int second_side = left ? 2 : 1;

  CascadeTrace trace;
  trace.steps.push_back(detail::make_step(first_side, StepKind::measurement, first_atom, first_state, tol));
  if (!trace.steps.back().post_state) return trace;

  Subspace induced = induced_map(induce, trace.steps.back().carrier_post);
  trace.steps.push_back(detail::make_step(second_side, StepKind::induction, induced, second_state, tol));
  if (!trace.steps.back().post_state) return trace;

  DensityState updated = *trace.steps.back().post_state;
  trace.steps.push_back(detail::make_step(second_side, StepKind::measurement, second_atom, updated, tol));

  trace.joint_probability = 1.0;
  for (const auto& s : trace.steps) trace.joint_probability *= s.probability;
  return trace;
}

/// |⟨ψ⊗φ | Σ c_i ψ_i⊗φ_i⟩|² / (‖ψ‖² ‖φ‖² ‖c‖²), evaluated directly in C^{d1·d2}.
inline double born_probability(const TensorVector& tv, const Vector& psi, const Vector& phi) {
  validate(tv);
  if (psi.size() != tv.left_dim() || phi.size() != tv.right_dim())
    throw Error(ErrorKind::BadShape, "outcome vectors do not match the tensor factors");
  const double np = psi.squaredNorm(), nf = phi.squaredNorm(), nc = tv.coefficients.squaredNorm();
  if (np == 0.0 || nf == 0.0) throw Error(ErrorKind::ZeroVector, "born_probability of a zero outcome vector");
  if (nc == 0.0) throw Error(ErrorKind::ZeroVector, "born_probability of the zero tensor");
  Vector product = Vector::Zero(psi.size() * phi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) product.segment(i * phi.size(), phi.size()) = psi(i) * phi;
  const Complex amp = product.dot(kron_vector(tv));
  return std::clamp(std::norm(amp) / (np * nf * nc), 0.0, 1.0);
}

/// Strictly descending chain of properties visited on one side: each step
/// contributes its prior carrier and its effective property.
inline std::vector<Subspace> side_chain(const CascadeTrace& trace, int side) {
  std::vector<Subspace> chain;
  auto push = [&](const Subspace& s) {
    if (chain.empty() || !chain.back().approx_equal(s)) chain.push_back(s);
  };
  for (const auto& step : trace.steps) {
    if (step.side != side) continue;
    push(step.carrier_pre);
    push(step.effective_property);
  }
  return chain;
}

/// True iff on both sides each recorded property is contained in its
/// predecessor (the ⊴ chain embeds in the carrier order).
inline bool chain_order_check(const CascadeTrace& trace) {
  for (int side : {1, 2}) {
    const Subspace* prev = nullptr;
    for (const auto& step : trace.steps) {
      if (step.side != side) continue;
      for (const Subspace* s : {&step.carrier_pre, &step.effective_property}) {
        if (prev && !s->leq(*prev)) return false;
        prev = s;
      }
    }
  }
  return true;
}

/// One discrepancy record per checked instance that failed.
struct Prop2Counterexample {
  std::string condition;
  std::size_t trial = 0;
  double discrepancy = 0.0;
};

struct Prop2Report {
  Eigen::Index dim = 0;
  std::size_t trials = 0;
  std::size_t fixed_point_checked = 0, compatibility_checked = 0, composition_checked = 0, bridge_checked = 0;
  double fixed_point_max = 0.0, compatibility_max = 0.0, composition_max = 0.0, bridge_max = 0.0;
  std::vector<Prop2Counterexample> counterexamples;

  bool passed() const noexcept { return counterexamples.empty(); }
};

/// Randomized verification of the hypotheses that make the Lüders transitions
/// order proper states:
///  (i)   carrier(ρ) ⊆ a  ⇒  lueders(ρ, a) = ρ
///  (ii)  P_a P_b = P_b P_a, carrier(ρ) ⊆ b  ⇒  carrier(lueders(ρ, a)) ⊆ b
///  (iii) a' ⊆ a  ⇒  lueders(lueders(ρ, a), a') = lueders(ρ, a')
///  and the bridge carrier(lueders(ρ, a)) = sasaki(a, carrier(ρ)).
inline Prop2Report check_prop2(Eigen::Index dim, std::size_t trials, Rng& rng, double tol = kDefaultTol) {
  if (dim < 1) throw Error(ErrorKind::PreconditionViolated, "dimension must be positive");
  Prop2Report rep;
  rep.dim = dim;
  rep.trials = trials;
  auto record = [&](const char* cond, std::size_t t, double d, double& max) {
    max = std::max(max, d);
    if (!(d <= tol)) rep.counterexamples.push_back({cond, t, d});
  };
  auto random_rank = [&](Eigen::Index lo) { return uniform_index(rng, lo, dim); };

  for (std::size_t t = 0; t < trials; ++t) {
    // (i) fixed point
    {
      Subspace a = random_subspace(dim, random_rank(1), rng, tol);
      DensityState rho(random_density_matrix(a, uniform_index(rng, 1, a.rank()), rng));
      auto out = lueders(rho, a);
      double d = out ? (out->matrix() - rho.matrix()).norm() : 1.0;
      record("fixed-point", t, d, rep.fixed_point_max);
      ++rep.fixed_point_checked;
    }
    // (ii) commuting compatible property stays actual
    {
      Matrix U = random_unitary(dim, rng);
      std::vector<Eigen::Index> ia, ib;
      while (ia.empty() || ib.empty()) {
        ia.clear();
        ib.clear();
        for (Eigen::Index k = 0; k < dim; ++k) {
          if (uniform_index(rng, 0, 1)) ia.push_back(k);
          if (uniform_index(rng, 0, 1)) ib.push_back(k);
        }
      }
      Subspace a = Subspace::from_orthonormal(U(Eigen::all, ia), tol);
      Subspace b = Subspace::from_orthonormal(U(Eigen::all, ib), tol);
      DensityState rho(random_density_matrix(b, uniform_index(rng, 1, b.rank()), rng));
      if (auto out = lueders(rho, a)) {
        record("compatibility", t, carrier(*out, tol).containment_gap(b), rep.compatibility_max);
        ++rep.compatibility_checked;
      }
    }
    // (iii) composition for a' ⊆ a
    {
      Subspace a = random_subspace(dim, random_rank(1), rng, tol);
      Subspace a2 = random_subspace_within(a, uniform_index(rng, 1, a.rank()), rng);
      Subspace support = Subspace::full(dim, tol);
      DensityState rho(random_density_matrix(support, random_rank(1), rng));
      auto direct = lueders(rho, a2);
      auto first = lueders(rho, a);
      std::optional<DensityState> nested = first ? lueders(*first, a2) : std::nullopt;
      double d;
      if (direct && nested) d = (direct->matrix() - nested->matrix()).norm();
      else d = (direct.has_value() == nested.has_value()) ? 0.0 : 1.0;
      record("composition", t, d, rep.composition_max);
      ++rep.composition_checked;
    }
    // Sasaki bridge
    {
      Subspace a = random_subspace(dim, random_rank(1), rng, tol);
      DensityState rho(random_density_matrix(Subspace::full(dim, tol), random_rank(1), rng));
      Subspace c = carrier(rho, tol);
      Subspace expected = sasaki_s(a, c);
      auto out = lueders(rho, a);
      Subspace got = out ? carrier(*out, tol) : Subspace::zero(dim, tol);
      record("sasaki-bridge", t, got.distance(expected), rep.bridge_max);
      ++rep.bridge_checked;
    }
  }
  return rep;
}

}  // namespace qcomp

#pragma once

// Seeded randomized verification campaigns. Every suite is deterministic in
// (name, seed, trials, dim); trial t draws from its own generator seeded with
// derive_seed(seed, t).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcomp/cascade.hpp"
#include "qcomp/compound.hpp"
#include "qcomp/galois.hpp"
#include "qcomp/hilbert.hpp"
#include "qcomp/order.hpp"
#include "qcomp/quantale.hpp"
#include "qcomp/random.hpp"

namespace qcomp {

struct Failure {
  std::string law;
  std::string inputs;
  double discrepancy = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double tolerance = 0.0;
  double max_discrepancy = 0.0;
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;

  bool passed() const noexcept { return failures.empty(); }

  nlohmann::json to_json(bool with_elapsed = true) const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures) fs.push_back({{"law", f.law}, {"inputs", f.inputs}, {"discrepancy", f.discrepancy}});
    nlohmann::json j{{"suite", suite},
                     {"seed", seed},
                     {"trials", trials},
                     {"tolerance", tolerance},
                     {"max_discrepancy", max_discrepancy},
                     {"passed", passed()},
                     {"failures", fs}};
    if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

namespace suites {

/// Collects discrepancies against one tolerance; at most 50 failures are kept
/// verbatim, the rest only count toward max_discrepancy.
class Recorder {
 public:
  Recorder(VerificationReport& rep, double tol) : rep_(rep), tol_(tol) { rep_.tolerance = tol; }

  void check(const std::string& law, double discrepancy, const std::function<std::string()>& inputs) {
    if (!(discrepancy <= rep_.max_discrepancy)) rep_.max_discrepancy = discrepancy;
    if (!(discrepancy <= tol_)) {
      ++failures_;
      if (rep_.failures.size() < 50) rep_.failures.push_back({law, inputs(), discrepancy});
    }
  }
  void check(const std::string& law, bool holds, const std::function<std::string()>& inputs) {
    check(law, holds ? 0.0 : 1.0, inputs);
  }

 private:
  VerificationReport& rep_;
  double tol_;
  std::size_t failures_ = 0;
};

inline std::string trial_tag(std::uint64_t seed, std::size_t t) {
  return "seed=" + std::to_string(seed) + " trial=" + std::to_string(t);
}

inline std::vector<LatticePtr> catalog() {
  return {std::make_shared<const FiniteLattice>(lattices::chain(2)),
          std::make_shared<const FiniteLattice>(lattices::chain(3)),
          std::make_shared<const FiniteLattice>(lattices::boolean2()),
          std::make_shared<const FiniteLattice>(lattices::mo2())};
}

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"2-chain", "3-chain", "B2", "MO2"};
  return names;
}

inline void galois(VerificationReport& rep, std::uint64_t seed, std::size_t trials) {
  Recorder rec(rep, 0.0);
  if (trials == 0) return;
  auto cat = catalog();
  std::vector<QLattice> qs;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = 0; j < cat.size(); ++j) {
      qs.push_back(enumerate_Q(cat[i], cat[j]));
      names.push_back("Q(" + catalog_names()[i] + "," + catalog_names()[j] + ")");
    }
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const std::size_t qi = static_cast<std::size_t>(uniform_index(rng, 0, static_cast<Eigen::Index>(qs.size()) - 1));
    const auto& Q = qs[qi];
    auto pick = [&] { return static_cast<std::size_t>(uniform_index(rng, 0, static_cast<Eigen::Index>(Q.size()) - 1)); };
    const auto& f = Q.maps[pick()];
    const auto& g = Q.maps[pick()];
    auto tag = [&] { return trial_tag(seed, t) + " " + names[qi] + " f=" + JoinMap::describe(f.table()) +
                            " g=" + JoinMap::describe(g.table()); };
    const auto& L1 = *Q.source;
    const auto& L2 = *Q.target;
    MeetMap fs = galois_dual(f);
    bool adj = true, defl = true, infl = true;
    for (std::size_t a = 0; a < L1.size(); ++a)
      for (std::size_t b = 0; b < L2.size(); ++b)
        if (L1.leq(a, fs(b)) != L2.leq(f(a), b)) adj = false;
    for (std::size_t b = 0; b < L2.size(); ++b) defl = defl && L2.leq(f(fs(b)), b);
    for (std::size_t a = 0; a < L1.size(); ++a) infl = infl && L1.leq(a, fs(f(a)));
    rec.check("adjunction", adj, tag);
    rec.check("counit-deflationary", defl, tag);
    rec.check("unit-inflationary", infl, tag);
    rec.check("adjoint-round-trip", adjoint_of_meetmap(fs) == f, tag);
    rec.check("order-antitone", order_antitone_check(f, g), tag);

    std::vector<JoinMap> subset;
    std::vector<MeetMap> duals;
    const auto k = uniform_index(rng, 0, 4);
    for (Eigen::Index i = 0; i < k; ++i) {
      subset.push_back(Q.maps[pick()]);
      duals.push_back(galois_dual(subset.back()));
    }
    rec.check("dual-of-join-is-meet-of-duals",
              galois_dual(pointwise_join(Q.source, Q.target, subset)) == pointwise_meet(Q.target, Q.source, duals), tag);
  }
}

inline Eigen::Index pick_dim(Rng& rng, std::optional<Eigen::Index> dim, Eigen::Index lo, Eigen::Index hi) {
  return dim ? *dim : uniform_index(rng, lo, hi);
}

inline void orthomodular(VerificationReport& rep, std::uint64_t seed, std::size_t trials,
                         std::optional<Eigen::Index> dim) {
  Recorder rec(rep, kDefaultTol);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto n = pick_dim(rng, dim, 2, 4);
    Subspace A = random_subspace(n, uniform_index(rng, 0, n), rng);
    Matrix ext(n, A.rank() + uniform_index(rng, 0, n - A.rank()));
    ext << A.frame(), random_matrix(n, ext.cols() - A.rank(), rng);
    Subspace B = span(ext);
    Subspace C = random_subspace(n, uniform_index(rng, 0, n), rng);
    auto tag = [&] { return trial_tag(seed, t) + " dim=" + std::to_string(n); };
    rec.check("orthomodular", B.distance(join_s(A, meet_s(B, ortho_s(A)))), tag);
    rec.check("double-complement", ortho_s(ortho_s(A)).distance(A), tag);
    rec.check("de-morgan", ortho_s(join_s(A, C)).distance(meet_s(ortho_s(A), ortho_s(C))), tag);
  }
}

inline void sasaki(VerificationReport& rep, std::uint64_t seed, std::size_t trials, std::optional<Eigen::Index> dim) {
  Recorder rec(rep, kDefaultTol);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto n = pick_dim(rng, dim, 2, 4);
    Subspace A = random_subspace(n, uniform_index(rng, 0, n), rng);
    Subspace B = random_subspace(n, uniform_index(rng, 0, n), rng);
    auto tag = [&] { return trial_tag(seed, t) + " dim=" + std::to_string(n); };
    Subspace by_formula = sasaki_formula(A, B);
    rec.check("sasaki-cross-check", by_formula.distance(sasaki_image(A, B)), tag);
    rec.check("sasaki-below-a", by_formula.containment_gap(A), tag);
  }
}

inline TensorVector random_tensor(Rng& rng, Eigen::Index d1, Eigen::Index d2, Eigen::Index m) {
  TensorVector tv;
  tv.coefficients = random_vector(m, rng);
  tv.left_basis = random_unitary(d1, rng).leftCols(m);
  tv.right_basis = random_unitary(d2, rng).leftCols(m);
  return tv;
}

inline void tensor_iso(VerificationReport& rep, std::uint64_t seed, std::size_t trials,
                       std::optional<Eigen::Index> dim) {
  Recorder rec(rep, 1e-12);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto d1 = pick_dim(rng, dim, 1, 8), d2 = pick_dim(rng, dim, 1, 8);
    const auto m = uniform_index(rng, 1, std::min(d1, d2));
    const auto lin = t % 2 ? Linearity::antilinear : Linearity::linear;
    TensorVector tv = random_tensor(rng, d1, d2, m);
    auto tag = [&] { return trial_tag(seed, t) + " d1=" + std::to_string(d1) + " d2=" + std::to_string(d2) +
                            " m=" + std::to_string(m) + " " + to_string(lin); };
    CompoundOperator F = from_tensor(tv, lin);
    rec.check("hs-norm-equals-tensor-norm", std::abs(hs_norm(F) - tensor_norm(tv)), tag);
    TensorVector back = to_tensor(F, tv.left_basis, tv.right_basis);
    rec.check("tensor-round-trip", (back.coefficients - tv.coefficients).cwiseAbs().maxCoeff(), tag);
  }
}

inline CompoundOperator random_operator(Rng& rng, Eigen::Index d1, Eigen::Index d2) {
  const auto r = uniform_index(rng, 1, std::min(d1, d2));
  Matrix m = random_matrix(d2, r, rng) * random_matrix(r, d1, rng);
  return CompoundOperator(std::move(m), uniform_index(rng, 0, 1) ? Linearity::antilinear : Linearity::linear);
}

inline void quadruple(VerificationReport& rep, std::uint64_t seed, std::size_t trials,
                      std::optional<Eigen::Index> dim) {
  Recorder rec(rep, 1e-12);
  const DensityTolerance dt;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto d1 = pick_dim(rng, dim, 1, 4), d2 = pick_dim(rng, dim, 1, 4);
    CompoundOperator F = random_operator(rng, d1, d2);
    auto tag = [&] { return trial_tag(seed, t) + " d1=" + std::to_string(d1) + " d2=" + std::to_string(d2); };
    Quadruple q = qcomp::quadruple(F);
    for (const auto* rho : {&q.rho1, &q.rho2}) {
      auto d = diagnose_density(rho->matrix());
      rec.check("density-hermitian", d.hermitian_error, tag);
      rec.check("density-trace", d.trace_error, tag);
      rec.check("density-psd", d.min_eigenvalue >= dt.min_eigenvalue, tag);
    }
    rec.check("f21-is-adjoint", (q.f21.matrix() - F.adjoint().matrix()).norm() == 0.0 && q.f21.linearity() == F.linearity(),
              tag);
  }
}

/// Sum of left-first cascade probabilities over the product basis U1 ⊗ U2.
inline double cascade_total(const CompoundOperator& F, const Matrix& U1, const Matrix& U2) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < U1.cols(); ++i)
    for (Eigen::Index j = 0; j < U2.cols(); ++j)
      total += run_cascade(F, ray(U1.col(i)), ray(U2.col(j))).joint_probability;
  return total;
}

inline void cascade_born(VerificationReport& rep, std::uint64_t seed, std::size_t trials,
                         std::optional<Eigen::Index> dim) {
  Recorder rec(rep, kDefaultTol);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto d1 = pick_dim(rng, dim, 1, 4), d2 = pick_dim(rng, dim, 1, 4);
    const auto m = uniform_index(rng, 1, std::min(d1, d2));
    TensorVector tv = random_tensor(rng, d1, d2, m);
    Vector psi = random_vector(d1, rng), phi = random_vector(d2, rng);
    auto tag = [&] { return trial_tag(seed, t) + " d1=" + std::to_string(d1) + " d2=" + std::to_string(d2) +
                            " m=" + std::to_string(m); };
    CompoundOperator F = from_tensor(tv, Linearity::antilinear);
    const double born = born_probability(tv, psi, phi);
    const auto left = run_cascade(F, ray(psi), ray(phi), CascadeOrder::left_first);
    const auto right = run_cascade(F, ray(psi), ray(phi), CascadeOrder::right_first);
    rec.check("cascade-equals-born", std::abs(left.joint_probability - born), tag);
    rec.check("order-independence", std::abs(left.joint_probability - right.joint_probability), tag);
    rec.check("chain-descends", chain_order_check(left) && chain_order_check(right), tag);
    rec.check("completeness",
              std::abs(cascade_total(F, random_unitary(d1, rng), random_unitary(d2, rng)) - 1.0), tag);
  }
}

inline void prop2(VerificationReport& rep, std::uint64_t seed, std::size_t trials, std::optional<Eigen::Index> dim) {
  Recorder rec(rep, kDefaultTol);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto n = dim ? *dim : static_cast<Eigen::Index>(2 + t % 3);
    auto r = check_prop2(n, 1, rng);
    auto tag = [&] { return trial_tag(seed, t) + " dim=" + std::to_string(n); };
    rec.check("fixed-point", r.fixed_point_max, tag);
    rec.check("compatibility", r.compatibility_max, tag);
    rec.check("composition", r.composition_max, tag);
    rec.check("sasaki-bridge", r.bridge_max, tag);
  }
}

struct SpaceFixture {
  std::string name;
  SpacePtr space;
  std::vector<TransitionMap> members;
};

inline std::vector<SpaceFixture> quantale_fixtures() {
  auto c2 = std::make_shared<const FiniteLattice>(lattices::chain(2));
  auto c3 = std::make_shared<const FiniteLattice>(lattices::chain(3));
  auto b2 = std::make_shared<const FiniteLattice>(lattices::boolean2());
  std::vector<SpaceFixture> out;
  auto add = [&](std::string name, std::vector<std::string> st, LatticePtr L, std::vector<Element> c) {
    auto S = std::make_shared<const ProperStateSpace>(std::move(st), std::move(L), std::move(c));
    out.push_back({std::move(name), S, enumerate_members(S)});
  };
  add("2-state/2-chain", {"p", "q"}, c2, {1, 1});
  add("2-state/B2", {"p", "q"}, b2, {1, 2});
  add("3-state/3-chain", {"p", "q", "r"}, c3, {1, 1, 2});
  add("3-state/B2", {"p", "q", "r"}, b2, {1, 2, 3});
  return out;
}

inline void quantale(VerificationReport& rep, std::uint64_t seed, std::size_t trials) {
  Recorder rec(rep, 0.0);
  if (trials == 0) return;
  auto fixtures = quantale_fixtures();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto& fx = fixtures[static_cast<std::size_t>(uniform_index(rng, 0, static_cast<Eigen::Index>(fixtures.size()) - 1))];
    auto pick = [&]() -> const TransitionMap& {
      return fx.members[static_cast<std::size_t>(uniform_index(rng, 0, static_cast<Eigen::Index>(fx.members.size()) - 1))];
    };
    const auto& f = pick();
    const auto& g = pick();
    const auto& h = pick();
    auto tag = [&] { return trial_tag(seed, t) + " " + fx.name; };
    const TransitionMap gh[] = {g, h};
    const TransitionMap gh_union = union_join(fx.space, gh);
    const TransitionMap fg = compose(f, g), fh = compose(f, h);
    const TransitionMap fg_fh[] = {fg, fh};
    rec.check("closed-under-composition", is_member(fg), tag);
    rec.check("closed-under-union", is_member(gh_union), tag);
    rec.check("associativity", compose(compose(f, g), h) == compose(f, compose(g, h)), tag);
    rec.check("left-distributivity", compose(f, gh_union) == union_join(fx.space, fg_fh), tag);
    const TransitionMap sample[] = {f, g};
    rec.check("epimorphism", epimorphism_check(fx.space, sample).passed(), tag);
  }
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"galois",   "orthomodular", "sasaki", "tensor-iso",
                                              "quadruple", "cascade-born", "prop2",  "quantale"};
  return names;
}

/// Runs one named campaign. `dim` pins the Hilbert dimension for the
/// geometric suites and is ignored by the finite-lattice ones.
inline VerificationReport run_suite(const std::string& name, std::uint64_t seed, std::size_t trials,
                                    std::optional<Eigen::Index> dim = std::nullopt) {
  if (std::ranges::find(suite_names(), name) == suite_names().end())
    throw Error(ErrorKind::UnknownSuite, "'" + name + "'");
  if (dim && *dim < 1) throw Error(ErrorKind::PreconditionViolated, "dimension must be positive");
  VerificationReport rep;
  rep.suite = name;
  rep.seed = seed;
  rep.trials = trials;
  const auto start = std::chrono::steady_clock::now();
  if (name == "galois") suites::galois(rep, seed, trials);
  else if (name == "orthomodular") suites::orthomodular(rep, seed, trials, dim);
  else if (name == "sasaki") suites::sasaki(rep, seed, trials, dim);
  else if (name == "tensor-iso") suites::tensor_iso(rep, seed, trials, dim);
  else if (name == "quadruple") suites::quadruple(rep, seed, trials, dim);
  else if (name == "cascade-born") suites::cascade_born(rep, seed, trials, dim);
  else if (name == "prop2") suites::prop2(rep, seed, trials, dim);
  else suites::quantale(rep, seed, trials);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace qcomp

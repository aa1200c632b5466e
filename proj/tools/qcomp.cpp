// qcomp: command-line front end for the compound-systems toolkit.
//
// Exit codes: 0 when every checked law holds, 1 when a violation is found,
// 2 for usage, parse and input-shape errors.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcomp/qcomp.hpp"

namespace {

using nlohmann::json;
using namespace qcomp;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Globals {
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  bool json = false;
  bool quiet = false;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownSuite:
    case ErrorKind::UnknownElement:
    case ErrorKind::BadShape:
    case ErrorKind::NonFinite:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::TooLarge:
    case ErrorKind::ZeroOperator:
    case ErrorKind::ZeroVector:
    case ErrorKind::BadBasis:
      return kUsage;
    default:
      return kViolation;
  }
}

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {}

  /// Machine output under --json, otherwise the human rendering.
  template <typename Human>
  void emit(const json& j, Human&& human) const {
    if (g_.quiet) return;
    if (g_.json) {
      std::cout << j.dump(2) << '\n';
    } else {
      human(std::cout);
    }
  }
  void emit(const json& j) const {
    emit(j, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  }

 private:
  const Globals& g_;
};

fs::path base_of(const std::string& file) {
  auto p = fs::path(file).parent_path();
  return p.empty() ? fs::path(".") : p;
}

std::string join_labels(const FiniteLattice& L, const std::vector<Element>& xs) {
  std::string s;
  for (Element x : xs) s += (s.empty() ? "" : " ") + L.label(x);
  return s.empty() ? "(none)" : s;
}

/// Label first, then a plain index.
Element element_arg(const FiniteLattice& L, const std::string& text) {
  for (Element e = 0; e < L.size(); ++e)
    if (L.label(e) == text) return e;
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) return L.checked(std::stoul(text));
  throw Error(ErrorKind::UnknownElement, "'" + text + "'");
}

Subspace subspace_file(const std::string& file, double tol) { return span(io::matrix_from_json(io::read_file(file)), tol); }

json subspace_json(const Subspace& s) { return json{{"rank", s.rank()}, {"frame", io::matrix_to_json(s.frame())}}; }

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

// ---- lattice ---------------------------------------------------------------

int lattice_check(const Globals& g, const std::string& file) {
  auto doc = io::lattice_from_json(io::read_file(file));
  const auto& L = doc.lattice;
  json j{{"elements", L.size()},
         {"bottom", L.label(L.bottom())},
         {"top", L.label(L.top())},
         {"atoms", json::array()},
         {"join_irreducibles", json::array()},
         {"distributive", L.is_distributive()}};
  for (Element a : L.atoms()) j["atoms"].push_back(L.label(a));
  for (Element a : L.join_irreducibles()) j["join_irreducibles"].push_back(L.label(a));
  if (doc.ortho) {
    doc.ortho_lattice();
    j["orthomodular"] = true;
  }
  Output(g).emit(j, [&](std::ostream& os) {
    os << "lattice with " << L.size() << " elements, bottom " << L.label(L.bottom()) << ", top " << L.label(L.top())
       << '\n'
       << "atoms: " << join_labels(L, L.atoms()) << '\n'
       << "join-irreducibles: " << join_labels(L, L.join_irreducibles()) << '\n'
       << "distributive: " << (L.is_distributive() ? "yes" : "no") << '\n';
    if (doc.ortho) os << "orthocomplementation: valid, orthomodular\n";
  });
  return kOk;
}

int lattice_sasaki(const Globals& g, const std::string& file, const std::string& a_text, const std::string& b_text) {
  auto doc = io::lattice_from_json(io::read_file(file));
  auto O = doc.ortho_lattice();
  const Element a = element_arg(O.lattice(), a_text), b = element_arg(O.lattice(), b_text);
  const Element r = O.sasaki(a, b);
  json j{{"a", O.lattice().label(a)},
         {"b", O.lattice().label(b)},
         {"sasaki", O.lattice().label(r)},
         {"compatible", O.compatible(a, b)}};
  Output(g).emit(j, [&](std::ostream& os) {
    os << "phi_" << O.lattice().label(a) << "(" << O.lattice().label(b) << ") = " << O.lattice().label(r)
       << (O.compatible(a, b) ? "  (compatible)" : "") << '\n';
  });
  return kOk;
}

// ---- galois ----------------------------------------------------------------

int galois_dual_cmd(const Globals& g, const std::string& file) {
  JoinMap f = io::map_from_json(io::read_file(file), base_of(file));
  MeetMap d = galois_dual(f);
  const auto& L1 = *f.source();
  const auto& L2 = *f.target();
  bool adj = true;
  for (Element a = 0; a < L1.size(); ++a)
    for (Element b = 0; b < L2.size(); ++b) adj = adj && (L1.leq(a, d(b)) == L2.leq(f(a), b));
  const bool round_trip = adjoint_of_meetmap(d) == f;
  json j = io::meetmap_to_json(d);
  j["adjunction"] = adj;
  j["round_trip"] = round_trip;
  Output(g).emit(j, [&](std::ostream& os) {
    os << "f  = " << JoinMap::describe(f.table()) << '\n' << "f* = " << JoinMap::describe(d.table()) << '\n';
    for (Element b = 0; b < L2.size(); ++b) os << "  f*(" << L2.label(b) << ") = " << L1.label(d(b)) << '\n';
    os << "adjunction: " << (adj ? "holds" : "FAILS") << ", round trip: " << (round_trip ? "holds" : "FAILS") << '\n';
  });
  return adj && round_trip ? kOk : kViolation;
}

int galois_enumerate(const Globals& g, const std::string& f1, const std::string& f2) {
  auto L1 = std::make_shared<const FiniteLattice>(io::lattice_from_json(io::read_file(f1)).lattice);
  auto L2 = std::make_shared<const FiniteLattice>(io::lattice_from_json(io::read_file(f2)).lattice);
  QLattice Q = enumerate_Q(L1, L2);
  const bool top_ok = Q.top() == separation_state(L1, L2);
  const bool bottom_ok = Q.bottom() == absurd_state(L1, L2);
  json maps = json::array();
  for (const auto& f : Q.maps) maps.push_back({{"table", f.table()}, {"class", classify_map(f).primary()}});
  json j{{"size", Q.size()},
         {"maps", maps},
         {"top", Q.order.top()},
         {"bottom", Q.order.bottom()},
         {"top_is_separation", top_ok},
         {"bottom_is_absurd", bottom_ok}};
  Output(g).emit(j, [&](std::ostream& os) {
    os << "|Q| = " << Q.size() << '\n';
    for (std::size_t i = 0; i < Q.size(); ++i) {
      os << "  " << std::setw(3) << i << "  " << JoinMap::describe(Q.maps[i].table()) << "  "
         << classify_map(Q.maps[i]).primary();
      if (i == Q.order.top()) os << "  (top, separation)";
      if (i == Q.order.bottom()) os << "  (bottom, absurd)";
      os << '\n';
    }
  });
  return top_ok && bottom_ok ? kOk : kViolation;
}

int galois_classify(const Globals& g, const std::string& file) {
  JoinMap f = io::map_from_json(io::read_file(file), base_of(file));
  MapClass c = classify_map(f);
  json j{{"class", c.primary()}, {"atomistic", c.atomistic}, {"separation_like", c.separation_like}};
  Output(g).emit(j, [&](std::ostream& os) {
    os << JoinMap::describe(f.table()) << ": " << c.primary() << " (atomistic: " << (c.atomistic ? "yes" : "no")
       << ", separation-like: " << (c.separation_like ? "yes" : "no") << ")\n";
  });
  return kOk;
}

// ---- hilbert ---------------------------------------------------------------

int hilbert_op(const Globals& g, const std::string& op, const std::string& fa, const std::string& fb) {
  Subspace A = subspace_file(fa, g.tol);
  Subspace r = Subspace::zero(A.ambient_dim(), g.tol);
  if (op == "ortho") {
    if (!fb.empty()) throw Error(ErrorKind::PreconditionViolated, "ortho takes a single subspace");
    r = ortho_s(A);
  } else {
    if (fb.empty()) throw Error(ErrorKind::PreconditionViolated, op + " needs two subspaces");
    Subspace B = subspace_file(fb, g.tol);
    if (op == "meet") r = meet_s(A, B);
    else if (op == "join") r = join_s(A, B);
    else r = sasaki_s(A, B);
  }
  Output(g).emit(subspace_json(r), [&](std::ostream& os) {
    os << op << ": rank " << r.rank() << " in C^" << r.ambient_dim() << '\n' << io::matrix_to_json(r.frame()).dump() << '\n';
  });
  return kOk;
}

// ---- compound --------------------------------------------------------------

int compound_quadruple(const Globals& g, const std::string& file) {
  CompoundOperator F = io::operator_from_json(io::read_file(file));
  Quadruple q = quadruple(F);
  auto d1 = diagnose_density(q.rho1.matrix());
  auto d2 = diagnose_density(q.rho2.matrix());
  auto diag = [](const DensityDiagnostics& d) {
    return json{{"hermitian_error", d.hermitian_error}, {"min_eigenvalue", d.min_eigenvalue},
                {"trace_error", d.trace_error}, {"ok", d.ok()}};
  };
  json j{{"f12", io::operator_to_json(q.f12)},
         {"rho1", io::matrix_to_json(q.rho1.matrix())},
         {"rho2", io::matrix_to_json(q.rho2.matrix())},
         {"f21", io::operator_to_json(q.f21)},
         {"rho1_diagnostics", diag(d1)},
         {"rho2_diagnostics", diag(d2)}};
  Output(g).emit(j, [&](std::ostream& os) {
    os << "F: " << F.dim_out() << "x" << F.dim_in() << ", " << to_string(F.linearity()) << '\n';
    os << "rho1 = " << io::matrix_to_json(q.rho1.matrix()).dump() << '\n';
    os << "rho2 = " << io::matrix_to_json(q.rho2.matrix()).dump() << '\n';
    os << "f21  = " << io::operator_to_json(q.f21).dump() << '\n';
    for (auto [name, d] : {std::pair{"rho1", d1}, std::pair{"rho2", d2}})
      os << name << ": hermitian error " << fmt(d.hermitian_error) << ", min eigenvalue " << fmt(d.min_eigenvalue)
         << ", trace error " << fmt(d.trace_error) << (d.ok() ? "" : "  INVALID") << '\n';
  });
  return d1.ok() && d2.ok() ? kOk : kViolation;
}

int compound_tensor(const Globals& g, const std::string& file) {
  CompoundOperator F = io::operator_from_json(io::read_file(file));
  TensorVector tv = schmidt_tensor(F);
  json j = io::tensor_to_json(tv);
  Output(g).emit(j, [&](std::ostream& os) {
    os << tv.terms() << " Schmidt term(s), norm " << fmt(tensor_norm(tv)) << '\n';
    for (Eigen::Index i = 0; i < tv.terms(); ++i) os << "  c" << i << " = " << fmt(std::abs(tv.coefficients(i))) << '\n';
    os << j.dump() << '\n';
  });
  return kOk;
}

int compound_probe(const Globals& g, const std::string& ff, const std::string& fg, std::size_t samples) {
  CompoundOperator F = io::operator_from_json(io::read_file(ff));
  CompoundOperator G = io::operator_from_json(io::read_file(fg));
  Rng rng(derive_seed(g.seed, 0));
  ProbeReport r = atomicity_probe(F, G, samples, rng, g.tol);
  const char* kind = r.witness_kind == WitnessKind::none        ? "none"
                     : r.witness_kind == WitnessKind::not_below ? "not-below"
                                                                : "not-equal";
  json j{{"rays_tested", r.rays_tested},
         {"f_is_zero", r.f_is_zero},
         {"below_on_samples", r.below_on_samples},
         {"equal_on_samples", r.equal_on_samples},
         {"consistent", r.consistent_with_prop1},
         {"witness_kind", kind}};
  if (r.witness) j["witness"] = io::matrix_to_json(*r.witness);
  Output(g).emit(j, [&](std::ostream& os) {
    os << r.rays_tested << " rays: f " << (r.f_is_zero ? "= 0" : "!= 0") << ", f <= g "
       << (r.below_on_samples ? "on all samples" : "fails") << ", f = g " << (r.equal_on_samples ? "on all samples" : "fails")
       << '\n'
       << (r.consistent_with_prop1 ? "no counterexample" : "COUNTEREXAMPLE found") << " (witness: " << kind << ")\n";
  });
  return r.consistent_with_prop1 ? kOk : kViolation;
}

// ---- cascade ---------------------------------------------------------------

json trace_json(const CascadeTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"side", s.side},
                     {"kind", to_string(s.kind)},
                     {"probability", s.probability},
                     {"measured_rank", s.measured_property.rank()},
                     {"carrier_pre_rank", s.carrier_pre.rank()},
                     {"carrier_post_rank", s.carrier_post.rank()}});
  return json{{"steps", steps}, {"joint_probability", t.joint_probability}, {"chain_descends", chain_order_check(t)}};
}

int cascade_run(const Globals& g, const std::string& state, const std::string& left, const std::string& right) {
  TensorVector tv = io::tensor_from_json(io::read_file(state));
  Vector psi = io::vector_from_json(io::read_file(left));
  Vector phi = io::vector_from_json(io::read_file(right));
  CompoundOperator F = from_tensor(tv, Linearity::antilinear);
  const double born = born_probability(tv, psi, phi);
  auto lf = run_cascade(F, ray(psi, g.tol), ray(phi, g.tol), CascadeOrder::left_first, g.tol);
  auto rf = run_cascade(F, ray(psi, g.tol), ray(phi, g.tol), CascadeOrder::right_first, g.tol);
  const double d_born = std::abs(lf.joint_probability - born);
  const double d_order = std::abs(lf.joint_probability - rf.joint_probability);
  const bool ok = d_born <= g.tol && d_order <= g.tol && chain_order_check(lf) && chain_order_check(rf);
  json j{{"left_first", trace_json(lf)}, {"right_first", trace_json(rf)}, {"born", born},
         {"born_discrepancy", d_born}, {"order_discrepancy", d_order}, {"passed", ok}};
  Output(g).emit(j, [&](std::ostream& os) {
    for (auto [name, t] : {std::pair{"left-first", &lf}, std::pair{"right-first", &rf}}) {
      os << name << ":\n";
      for (const auto& s : t->steps)
        os << "  side " << s.side << "  " << std::left << std::setw(12) << to_string(s.kind) << std::right
           << " p = " << fmt(s.probability) << "  carrier rank " << s.carrier_pre.rank() << " -> " << s.carrier_post.rank()
           << '\n';
      os << "  joint probability " << fmt(t->joint_probability) << '\n';
    }
    os << "Born probability " << fmt(born) << ", discrepancy " << fmt(d_born) << (ok ? "" : "  VIOLATION") << '\n';
  });
  return ok ? kOk : kViolation;
}

void print_table(std::ostream& os, const std::vector<VerificationReport>& reps) {
  os << std::left << std::setw(14) << "suite" << std::right << std::setw(8) << "trials" << std::setw(10) << "failures"
     << std::setw(16) << "max discrep." << std::setw(12) << "tolerance" << std::setw(12) << "ms" << "  result\n";
  for (const auto& r : reps)
    os << std::left << std::setw(14) << r.suite << std::right << std::setw(8) << r.trials << std::setw(10)
       << r.failures.size() << std::setw(16) << fmt(r.max_discrepancy) << std::setw(12) << fmt(r.tolerance)
       << std::setw(12) << fmt(r.elapsed_ms) << "  " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& r : reps)
    for (const auto& f : r.failures) os << "  " << r.suite << ": " << f.law << " [" << f.inputs << "] " << fmt(f.discrepancy) << '\n';
}

int run_reports(const Globals& g, const std::vector<std::string>& names, std::optional<Eigen::Index> dim,
                const std::string& report_path) {
  std::vector<VerificationReport> reps;
  for (const auto& n : names) reps.push_back(run_suite(n, g.seed, g.trials, dim));
  json all = json::array();
  for (const auto& r : reps) all.push_back(r.to_json());
  json j = names.size() == 1 ? all[0] : all;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw Error(ErrorKind::PreconditionViolated, "cannot write " + report_path);
    out << j.dump(2) << '\n';
  }
  Output(g).emit(j, [&](std::ostream& os) { print_table(os, reps); });
  for (const auto& r : reps)
    if (!r.passed()) return kViolation;
  return kOk;
}

// ---- quantale --------------------------------------------------------------

int quantale_check(const Globals& g, const std::string& file) {
  SpacePtr S = io::space_from_json(io::read_file(file), base_of(file));
  QuantaleReport r = check_quantale_laws(S);
  json j{{"members", r.members},
         {"identity_member", r.identity_member},
         {"closed_under_union", r.closed_under_union},
         {"closed_under_composition", r.closed_under_composition},
         {"unit_law", r.unit_law},
         {"triples_checked", r.triples_checked},
         {"associativity_failures", r.associativity_failures},
         {"left_distributivity_failures", r.left_distributivity_failures},
         {"right_distributivity_failures", r.right_distributivity_failures},
         {"passed", r.passed()}};
  Output(g).emit(j, [&](std::ostream& os) {
    os << "|Q#| = " << r.members << ", " << r.triples_checked << " triples\n"
       << "identity member: " << (r.identity_member ? "yes" : "no") << ", unit law: " << (r.unit_law ? "holds" : "fails")
       << '\n'
       << "closed under union: " << (r.closed_under_union ? "yes" : "no")
       << ", under composition: " << (r.closed_under_composition ? "yes" : "no") << '\n'
       << "associativity failures: " << r.associativity_failures << '\n'
       << "left distributivity failures: " << r.left_distributivity_failures << '\n'
       << "right distributivity failures: " << r.right_distributivity_failures << " (informational)\n"
       << (r.passed() ? "PASS" : "FAIL") << '\n';
  });
  return r.passed() ? kOk : kViolation;
}

int quantale_epi(const Globals& g, const std::string& file) {
  SpacePtr S = io::space_from_json(io::read_file(file), base_of(file));
  auto members = enumerate_members(S);
  EpimorphismReport r = epimorphism_check(S, members);
  json j{{"members", members.size()},
         {"pairs_checked", r.pairs_checked},
         {"composition_failures", r.composition_failures},
         {"union_failures", r.union_failures},
         {"empty_union_ok", r.empty_union_ok},
         {"witnesses", r.witnesses},
         {"passed", r.passed()}};
  Output(g).emit(j, [&](std::ostream& os) {
    os << members.size() << " members, " << r.pairs_checked << " pairs\n"
       << "composition failures: " << r.composition_failures << ", union failures: " << r.union_failures
       << ", empty union: " << (r.empty_union_ok ? "ok" : "fails") << '\n'
       << (r.passed() ? "PASS" : "FAIL") << '\n';
  });
  return r.passed() ? kOk : kViolation;
}

// ---- convert ---------------------------------------------------------------

int convert_cmd(const Globals& g, const std::string& input, const std::string& from, const std::string& to,
                const std::string& output) {
  json out = io::convert(io::read_file(input), io::format_from_string(from), io::format_from_string(to), base_of(input));
  if (output.empty() || output == "-") {
    if (!g.quiet) std::cout << out.dump(2) << '\n';
  } else {
    std::ofstream f(output);
    if (!f) throw Error(ErrorKind::PreconditionViolated, "cannot write " + output);
    f << out.dump(2) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcomp: lattices, Galois duals, Sasaki projection and measurement cascades for compound systems"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--trials", g.trials, "trials per randomized suite")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("-q,--quiet", g.quiet, "no output; exit code only");
  app.fallthrough();

  int rc = kOk;
  std::string f1, f2, a_text, b_text, op, from, to, output, report, suite;
  std::size_t samples = 200;
  std::optional<Eigen::Index> dim;

  auto* lattice = app.add_subcommand("lattice", "finite lattices")->require_subcommand(1);
  auto* lcheck = lattice->add_subcommand("check", "validate a lattice file");
  lcheck->add_option("file", f1)->required()->check(CLI::ExistingFile);
  lcheck->callback([&] { rc = lattice_check(g, f1); });
  auto* lsas = lattice->add_subcommand("sasaki", "Sasaki projection phi_a(b) in an ortholattice");
  lsas->add_option("file", f1)->required()->check(CLI::ExistingFile);
  lsas->add_option("a", a_text)->required();
  lsas->add_option("b", b_text)->required();
  lsas->callback([&] { rc = lattice_sasaki(g, f1, a_text, b_text); });

  auto* galois = app.add_subcommand("galois", "join maps and their duals")->require_subcommand(1);
  auto* gdual = galois->add_subcommand("dual", "Galois dual of a join map");
  gdual->add_option("map", f1)->required()->check(CLI::ExistingFile);
  gdual->callback([&] { rc = galois_dual_cmd(g, f1); });
  auto* genum = galois->add_subcommand("enumerate", "all join maps L1 -> L2");
  genum->add_option("L1", f1)->required()->check(CLI::ExistingFile);
  genum->add_option("L2", f2)->required()->check(CLI::ExistingFile);
  genum->callback([&] { rc = galois_enumerate(g, f1, f2); });
  auto* gcls = galois->add_subcommand("classify", "classify a join map");
  gcls->add_option("map", f1)->required()->check(CLI::ExistingFile);
  gcls->callback([&] { rc = galois_classify(g, f1); });

  auto* hilbert = app.add_subcommand("hilbert", "subspace lattice operations")->require_subcommand(1);
  for (const char* name : {"meet", "join", "ortho", "sasaki"}) {
    auto* sub = hilbert->add_subcommand(name, std::string(name) + " of spanning-set matrices");
    sub->add_option("A", f1)->required()->check(CLI::ExistingFile);
    sub->add_option("B", f2)->check(CLI::ExistingFile);
    sub->callback([&, name] { rc = hilbert_op(g, name, f1, f2); });
  }

  auto* compound = app.add_subcommand("compound", "compound-system operators")->require_subcommand(1);
  auto* cq = compound->add_subcommand("quadruple", "(F, rho1, rho2, F^dagger) of an operator");
  cq->add_option("F", f1)->required()->check(CLI::ExistingFile);
  cq->callback([&] { rc = compound_quadruple(g, f1); });
  auto* ct = compound->add_subcommand("tensor", "Schmidt tensor form of an operator");
  ct->add_option("F", f1)->required()->check(CLI::ExistingFile);
  ct->callback([&] { rc = compound_tensor(g, f1); });
  auto* cp = compound->add_subcommand("probe", "sampled atomicity probe for f <= g");
  cp->add_option("F", f1)->required()->check(CLI::ExistingFile);
  cp->add_option("G", f2)->required()->check(CLI::ExistingFile);
  cp->add_option("--samples", samples, "random rays")->capture_default_str();
  cp->callback([&] { rc = compound_probe(g, f1, f2, samples); });

  auto* cascade = app.add_subcommand("cascade", "measurement cascades")->require_subcommand(1);
  auto* crun = cascade->add_subcommand("run", "cascade for one outcome pair versus the Born rule");
  crun->add_option("--state", f1, "tensor vector")->required()->check(CLI::ExistingFile);
  crun->add_option("--left", a_text, "left outcome vector")->required()->check(CLI::ExistingFile);
  crun->add_option("--right", b_text, "right outcome vector")->required()->check(CLI::ExistingFile);
  crun->callback([&] { rc = cascade_run(g, f1, a_text, b_text); });
  auto* cver = cascade->add_subcommand("verify", "randomized cascade-born and prop2 campaigns");
  cver->add_option("--dim", dim, "pin the Hilbert dimension")->check(CLI::PositiveNumber);
  cver->add_option("--report", report, "also write the JSON report here");
  cver->callback([&] { rc = run_reports(g, {"cascade-born", "prop2"}, dim, report); });

  auto* quantale = app.add_subcommand("quantale", "the transition quantale of a proper-state space")->require_subcommand(1);
  auto* qc = quantale->add_subcommand("check", "exhaustive quantale laws");
  qc->add_option("space", f1)->required()->check(CLI::ExistingFile);
  qc->callback([&] { rc = quantale_check(g, f1); });
  auto* qe = quantale->add_subcommand("epi", "property-propagation epimorphism on all member pairs");
  qe->add_option("space", f1)->required()->check(CLI::ExistingFile);
  qe->callback([&] { rc = quantale_epi(g, f1); });

  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  verify->add_option("suite", suite)->required();
  verify->add_option("--dim", dim, "pin the Hilbert dimension")->check(CLI::PositiveNumber);
  verify->add_option("--report", report, "also write the JSON report here");
  verify->callback([&] {
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    rc = run_reports(g, names, dim, report);
  });

  auto* conv = app.add_subcommand("convert", "convert between JSON formats");
  conv->add_option("input", f1)->required()->check(CLI::ExistingFile);
  conv->add_option("--from", from, "lattice-json | map-json | matrix-json | tv-json")->required();
  conv->add_option("--to", to, "lattice-json | map-json | matrix-json | tv-json")->required();
  conv->add_option("-o,--output", output, "output file (stdout by default)");
  conv->callback([&] { rc = convert_cmd(g, f1, from, to, output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "qcomp: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "qcomp: " << e.what() << '\n';
    return kUsage;
  }
  return rc;
}

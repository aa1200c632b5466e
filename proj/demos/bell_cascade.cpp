// Measurement cascade on a Bell pair and on a random entangled state.

#include <cmath>
#include <iomanip>
#include <iostream>

#include "qcomp/qcomp.hpp"

using namespace qcomp;

namespace {

void print_trace(const char* title, const CascadeTrace& t) {
  std::cout << title << '\n';
  for (const auto& s : t.steps)
    std::cout << "  side " << s.side << "  " << std::left << std::setw(12) << to_string(s.kind) << std::right
              << "  p = " << std::setprecision(6) << s.probability << "  carrier rank " << s.carrier_pre.rank() << " -> "
              << s.carrier_post.rank() << '\n';
  std::cout << "  joint probability " << t.joint_probability << '\n';
}

}  // namespace

int main() {
  const double s = 1.0 / std::sqrt(2.0);
  TensorVector bell{Vector::Constant(2, s), Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  CompoundOperator F = from_tensor(bell, Linearity::antilinear);

  Vector up = basis_vector(2, 0), down = basis_vector(2, 1);
  print_trace("Bell pair, outcomes (up, up):", run_cascade(F, ray(up), ray(up), CascadeOrder::left_first));
  print_trace("Bell pair, outcomes (up, down):", run_cascade(F, ray(up), ray(down), CascadeOrder::left_first));

  // A random state in C^3 (x) C^3: both orders reproduce the Born rule.
  Rng rng(2024);
  TensorVector tv{random_vector(3, rng), random_unitary(3, rng), random_unitary(3, rng)};
  CompoundOperator G = from_tensor(tv, Linearity::antilinear);
  Vector psi = random_vector(3, rng), phi = random_vector(3, rng);
  auto lf = run_cascade(G, ray(psi), ray(phi), CascadeOrder::left_first);
  auto rf = run_cascade(G, ray(psi), ray(phi), CascadeOrder::right_first);
  print_trace("random state, left first:", lf);
  print_trace("random state, right first:", rf);
  std::cout << "Born probability " << born_probability(tv, psi, phi) << ", chains descend: "
            << (chain_order_check(lf) && chain_order_check(rf) ? "yes" : "no") << '\n';
}

// Join maps B2 -> 2-chain, their Galois duals and a Sasaki projection in MO2.

#include <iostream>

#include "qcomp/qcomp.hpp"

using namespace qcomp;

int main() {
  auto b2 = std::make_shared<const FiniteLattice>(lattices::boolean2());
  auto c2 = std::make_shared<const FiniteLattice>(lattices::chain(2));

  QLattice Q = enumerate_Q(b2, c2);
  std::cout << "Q(B2, 2-chain) has " << Q.size() << " states of compoundness\n";
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const auto& f = Q.maps[i];
    std::cout << "  f = " << JoinMap::describe(f.table()) << "  f* = " << JoinMap::describe(galois_dual(f).table())
              << "  " << classify_map(f).primary();
    if (i == Q.order.top()) std::cout << "  (separation)";
    if (i == Q.order.bottom()) std::cout << "  (absurd)";
    std::cout << '\n';
  }

  OrthoLattice mo2 = lattices::ortho_mo2();
  const auto& L = mo2.lattice();
  const Element a = L.index_of("a"), b = L.index_of("b");
  std::cout << "in MO2: phi_a(b) = " << L.label(mo2.sasaki(a, b)) << ", a and b compatible: "
            << (mo2.compatible(a, b) ? "yes" : "no") << '\n';
}

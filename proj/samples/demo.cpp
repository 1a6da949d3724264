// Walks through the P_n family: tables, invariants, cohomology and a few
// link computations.

#include <iostream>

#include "quandle.hpp"

int main() {
  using namespace quandle;

  const Quandle p3 = p_quandle(2, parse_cycles("(1 2)", 2));
  std::cout << "P_2^(1 2):\n" << format_table(p3);
  std::cout << "qp = " << quandle_polynomial(p3).to_string() << '\n';
  std::cout << "|End| = " << endomorphisms(p3).size() << ", |Aut| = " << automorphism_group(p3).elements.size()
            << '\n';
  std::cout << "H^2_Q(P_3; Z) = " << cohomology_Q(p3, 2, Coefficients::integers()).to_string() << '\n';
  std::cout << "good involutions:";
  for (const auto& s : good_involutions(p3)) std::cout << ' ' << format_element_cycles(s.rho());
  std::cout << '\n';

  const SymmetricQuandle sym(p3, parse_element_cycles("(1 2)", 3));
  std::cout << "H^2_{Q,rho}(P_3; Z2) = "
            << symmetric_cohomology(sym, 2, Coefficients::integers_mod(2)).to_string() << '\n';

  // Two-component links with linking number 0..4 against P_3^(1 2 3).
  const Quandle p = p_quandle(3, long_cycle(3));
  for (long long w = 0; w <= 4; ++w) {
    const LinkDiagram d = synthesize_link(LinkingGraph::from_weights({{0, w}, {w, 0}}));
    const auto phi = cocycle_invariant(d, p, theta_cocycle(3));
    const auto q = quiver(d, p, endomorphisms(p));
    std::cout << "lk = " << w << ": col = " << phi.augmentation() << ", Phi = " << phi.to_string()
              << ", quiver " << q.vertex_count() << " vertices / " << q.edges.size() << " edges\n";
  }
  return 0;
}

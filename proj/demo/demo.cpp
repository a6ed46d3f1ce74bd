// Walk through the library on a few spaces.

#include <iostream>

#include "symcart/geom.hpp"
#include "symcart/recognize.hpp"
#include "symcart/spacespec.hpp"

using namespace symcart;

int main() {
  try {
    SpaceInstance ai = parse_irreducible("AI(11)");
    std::cout << ai.name() << ": dim " << ai.dim() << ", k_P " << ai.k_P() << ", C_P "
              << format_rational(ai.C_P()) << "\n";

    HomotopyProfile p = profile(ai, 9);
    for (int k = 1; k <= 9; ++k)
      std::cout << "  pi_" << k << " = " << format_group(p.at(k)) << "\n";

    for (auto [a, b] : {std::pair{"CP(5)", "Gr(R,2,12)"}, {"CP(5)", "Gr(R,2,11)"},
                        {"AI(12)", "AII(6)"}})
      std::cout << a << " vs " << b << ": "
                << distinguish(parse_space(a), parse_space(b), 9).str() << "\n";

    GateVerdict g = theorem_a_gate(ai, {1, 0.2, 1});
    std::cout << "gate " << ai.name() << ", codim 1: " << g.name() << ", " << g.description
              << "\n";

    std::cout << "products compatible with Gr(R,2,12):\n";
    for (const ProductSpace& q : decompose(parse_irreducible("Gr(R,2,12)")))
      std::cout << "  " << q.name() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

// Prints the generator relations of the twisted double of T_p(xi) and
// whether each holds. Usage: taft_presentation [p]

#include <cstdlib>
#include <iostream>

#include "contra/double.hpp"

using namespace contra;

int main(int argc, char** argv) {
  const int p = argc > 1 ? std::atoi(argv[1]) : 3;
  if (!is_prime(p) || p > 5) {
    std::cerr << "p must be 2, 3 or 5\n";
    return 2;
  }
  const Cyclotomic xi = make_root_of_unity(p, 1);
  const TaftDouble d = taft_double_generators(p, xi);
  const CheckReport r = check_presentation(d.algebra(), d.generators, taft_double_relations(p, xi));
  std::cout << "dim = " << d.algebra().dim() << ", xi = " << xi << "\n";
  for (const auto& rel : r.witnesses["relations"]) {
    std::cout << (rel["holds"].get<bool>() ? "  holds  " : "  FAILS  ") << rel["relation"].get<std::string>() << "\n";
  }
  std::cout << "generated dim = " << r.witnesses["generated_dim"] << "\n";
  return r.passed() ? 0 : 1;
}

// Builds the s = 1 block of the twisted double of Sweedler's Hopf algebra and
// compares HH^-1 of the two-term DG algebras D_1[theta] (d theta = x'x) and
// D_1/(x'x)[theta] (d theta = 0).

#include <iostream>

#include "contra/dg.hpp"

using namespace contra;

int main() {
  const TaftDouble d = taft_double_generators(2, Cyclotomic(-1));
  const TaftBlock block = taft_block(d, 1);
  const StructureAlgebra& a = block.algebra();
  const Vector xpx = a.multiply(block.gen("x'"), block.gen("x"));

  const Subspace mixed = hh_minus_one(TwoTermDga(a, xpx));
  const QuotientAlgebra stable = quotient(a, {xpx});
  const Subspace stable_hh = hh_minus_one(TwoTermDga(stable.algebra, stable.algebra.zero()));

  std::cout << "dim D_1            = " << a.dim() << "\n";
  std::cout << "dim Z(D_1)         = " << center(a).dim() << "\n";
  std::cout << "dim D_1/(x'x)      = " << stable.algebra.dim() << "\n";
  std::cout << "dim Z(D_1/(x'x))   = " << center(stable.algebra).dim() << "\n";
  std::cout << "dim HH^-1 mixed    = " << mixed.dim() << "\n";
  std::cout << "dim HH^-1 stable   = " << stable_hh.dim() << "\n";

  const Vector xxp = a.multiply(block.gen("x"), block.gen("x'"));
  const bool basis_ok = mixed == Subspace::span(a.dim(), {xxp, a.multiply(xxp, block.gen("g"))});
  std::cout << "HH^-1 mixed = <xx', xx'g>: " << (basis_ok ? "yes" : "no") << "\n";
  return mixed.dim() != stable_hh.dim() && basis_ok ? 0 : 1;
}

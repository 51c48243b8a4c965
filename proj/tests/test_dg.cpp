#include <gtest/gtest.h>

#include "support.hpp"

using namespace contra;

namespace {

Fixtures& fixtures() {
  static Fixtures fx;
  return fx;
}

/// The same algebra written in the basis given by the columns of `p`.
StructureAlgebra change_basis(const StructureAlgebra& a, const Matrix& p, const Matrix& p_inv) {
  const std::size_t n = a.dim();
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = to_sparse(p_inv.apply(a.multiply(p.column(i), p.column(j))));
  return StructureAlgebra(n, std::move(table), p_inv.apply(a.unit()));
}

}  // namespace

TEST(TwoTermDga, RequiresCentralDifferential) {
  const HopfData t = taft(2, Cyclotomic(-1));
  EXPECT_THROW(TwoTermDga(t.algebra, t.algebra.basis(taft_index(2, 0, 1))), std::invalid_argument);
  EXPECT_THROW(TwoTermDga(t.algebra, Vector(3)), std::invalid_argument);
  EXPECT_NO_THROW(TwoTermDga(t.algebra, t.algebra.unit()));
}

TEST(Cohomology, ExtremeDifferentials) {
  for (const StructureAlgebra& a : {group_algebra(3).algebra, fixtures().sweedler_block(1).algebra()}) {
    const CohomologyProfile zero = complex_cohomology(TwoTermDga(a, a.zero()));
    EXPECT_EQ(zero, (CohomologyProfile{a.dim(), a.dim()}));
    const CohomologyProfile one = complex_cohomology(TwoTermDga(a, a.unit()));
    EXPECT_EQ(one, (CohomologyProfile{0, 0}));
  }
}

TEST(Cohomology, EulerCharacteristicVanishes) {
  const TaftBlock& b = fixtures().sweedler_block(1);
  const StructureAlgebra& a = b.algebra();
  const Subspace z_a = center(a);
  for (const auto& z : z_a.basis()) {
    const CohomologyProfile c = complex_cohomology(TwoTermDga(a, z));
    EXPECT_EQ(c.dim_h0, c.dim_h_minus1);
  }
}

TEST(Cohomology, CentralDifferentialMatchesQuotientProfile) {
  // dim ker(z .) = dim R - rank = dim R/(z) for central z
  const TaftBlock& b = fixtures().sweedler_block(1);
  const StructureAlgebra& a = b.algebra();
  std::vector<Vector> central = center(a).basis();
  central.push_back(a.multiply(b.gen("x'"), b.gen("x")));
  central.push_back(b.sigma - a.unit());
  for (const auto& z : central) {
    const CohomologyProfile mixed = complex_cohomology(TwoTermDga(a, z));
    const std::size_t q = quotient(a, {z}).algebra.dim();
    EXPECT_EQ(mixed, (CohomologyProfile{q, q}));
  }
}

TEST(HochschildMinusOne, SweedlerSeparation) {
  const TaftBlock& b = fixtures().sweedler_block(1);
  const StructureAlgebra& a = b.algebra();
  const Vector xpx = a.multiply(b.gen("x'"), b.gen("x"));
  const Vector xxp = a.multiply(b.gen("x"), b.gen("x'"));
  const Subspace mixed = hh_minus_one(TwoTermDga(a, xpx));
  EXPECT_EQ(mixed.dim(), 2u);
  EXPECT_EQ(mixed, Subspace::span(a.dim(), {xxp, a.multiply(xxp, b.gen("g"))}));
  const QuotientAlgebra q = quotient(a, {xpx});
  EXPECT_EQ(q.algebra.dim(), 6u);
  const Subspace stable = hh_minus_one(TwoTermDga(q.algebra, q.algebra.zero()));
  EXPECT_EQ(stable.dim(), 1u);
  EXPECT_TRUE(stable.contains(q.algebra.unit()));
  // the two cohomology profiles do not tell them apart
  EXPECT_EQ(complex_cohomology(TwoTermDga(a, xpx)), complex_cohomology(TwoTermDga(q.algebra, q.algebra.zero())));
}

TEST(HochschildMinusOne, InsideTheCenter) {
  const TaftBlock& b = fixtures().sweedler_block(1);
  const StructureAlgebra& a = b.algebra();
  const Subspace z = center(a);
  for (const auto& d : z.basis()) EXPECT_TRUE(z.contains(hh_minus_one(TwoTermDga(a, d))));
  EXPECT_EQ(hh_minus_one(TwoTermDga(a, a.zero())), z);
  const StructureAlgebra& d0 = fixtures().sweedler_block(0).algebra();
  EXPECT_EQ(hh_minus_one(TwoTermDga(d0, d0.zero())), center(d0));
}

TEST(HochschildMinusOne, InvertibleDifferentialKillsIt) {
  const HopfData h = group_algebra(3);
  EXPECT_EQ(hh_minus_one(TwoTermDga(h.algebra, h.algebra.basis(1))).dim(), 0u);
  EXPECT_EQ(hh_minus_one(TwoTermDga(h.algebra, h.algebra.zero())).dim(), 3u);
}

TEST(HochschildMinusOne, InvariantUnderBasisChange) {
  const TaftBlock& b = fixtures().sweedler_block(1);
  const StructureAlgebra& a = b.algebra();
  const Vector xpx = a.multiply(b.gen("x'"), b.gen("x"));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    Matrix p = testing_support::random_matrix(rng, a.dim(), a.dim());
    auto p_inv = inverse(p);
    if (!p_inv) continue;
    const StructureAlgebra moved = change_basis(a, p, *p_inv);
    const Vector z = p_inv->apply(xpx);
    EXPECT_EQ(hh_minus_one(TwoTermDga(moved, z)).dim(), 2u);
    EXPECT_EQ(complex_cohomology(TwoTermDga(moved, z)), complex_cohomology(TwoTermDga(a, xpx)));
    EXPECT_EQ(center(moved).dim(), 3u);
  }
}

TEST(StableQuotient, Dimensions) {
  EXPECT_EQ(stable_quotient(fixtures().twisted("kZ1")).algebra.dim(), 1u);
  EXPECT_EQ(stable_quotient(fixtures().twisted("kZ2")).algebra.dim(), 3u);
  EXPECT_EQ(stable_quotient(fixtures().twisted("kZ3")).algebra.dim(), 5u);
  const TaftBlock& d0 = fixtures().sweedler_block(0);
  const TaftBlock& d1 = fixtures().sweedler_block(1);
  EXPECT_EQ(stable_quotient(d0.algebra(), d0.sigma).algebra.dim(), 4u);
  EXPECT_EQ(stable_quotient(d1.algebra(), d1.sigma).algebra.dim(), 6u);
}

TEST(Diagonalizability, Candidates) {
  const auto c = sigma_eigenvalue_candidates(2);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_NE(std::find(c.begin(), c.end(), Cyclotomic(-2)), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), Cyclotomic(2)), c.end());
  EXPECT_EQ(sigma_eigenvalue_candidates(3).size(), 5u);
}

TEST(Diagonalizability, GroupDoubles) {
  for (int n : {1, 2, 3}) {
    const TwistedDouble& d = fixtures().twisted("kZ" + std::to_string(n));
    const CheckReport r = diagonalizability_report(d, sigma_eigenvalue_candidates(n));
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_TRUE(r.witnesses["diagonalizable"].get<bool>());
    EXPECT_EQ(r.witnesses["zero_eigenspace_dim"], 2 * n - 1);
  }
}

TEST(Diagonalizability, SweedlerBlocks) {
  const TaftBlock& d0 = fixtures().sweedler_block(0);
  const CheckReport r0 = diagonalizability_report(d0.algebra(), d0.sigma, sigma_eigenvalue_candidates(2));
  EXPECT_TRUE(r0.passed());
  EXPECT_EQ(r0.witnesses["minimal_polynomial"], (Polynomial::monomial(2) + Polynomial::monomial(1, Cyclotomic(2))).to_string());
  EXPECT_EQ(r0.witnesses["zero_eigenspace_dim"], 4);

  const TaftBlock& d1 = fixtures().sweedler_block(1);
  const CheckReport r1 = diagonalizability_report(d1.algebra(), d1.sigma, sigma_eigenvalue_candidates(2));
  EXPECT_FALSE(r1.witnesses["diagonalizable"].get<bool>());
  EXPECT_FALSE(r1.witnesses.contains("eigenspaces"));
  EXPECT_EQ(r1.witnesses["stable_quotient_dim"], 6);
}

TEST(Diagonalizability, MissingCandidatesArePreconditionFailures) {
  const TwistedDouble& d = fixtures().twisted("kZ3");
  const CheckReport r = diagonalizability_report(d, {Cyclotomic(0)});
  EXPECT_EQ(r.status, Status::precondition_failed);
}

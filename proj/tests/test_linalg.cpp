#include <gtest/gtest.h>

#include "support.hpp"

using namespace contra;
using testing_support::random_matrix;
using testing_support::random_vector;

namespace {

Matrix diag(const std::vector<Cyclotomic>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix jordan_nilpotent(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = Cyclotomic(1);
  return m;
}

Polynomial poly(std::vector<long> coeffs) {
  std::vector<Cyclotomic> c(coeffs.begin(), coeffs.end());
  return Polynomial(c);
}

}  // namespace

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
  EXPECT_EQ(kernel(Matrix(2, 2)).dim(), 2u);
  EXPECT_EQ(kernel(Matrix(0, 0)).dim(), 0u);
  EXPECT_EQ(kernel(Matrix(0, 3)).dim(), 3u);
  EXPECT_EQ(rank(Matrix(3, 0)), 0u);
}

TEST(Kernel, FactoredRankBound) {
  std::mt19937_64 rng(5);
  for (int order : {1, 3}) {
    const Matrix m = random_matrix(rng, 5, 3, order) * random_matrix(rng, 3, 5, order);
    const Subspace k = kernel(m);
    EXPECT_GE(k.dim(), 2u);
    EXPECT_EQ(k.dim() + rank(m), 5u);
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(Kernel, RankNullityOnRandomShapes) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + trial % 6, c = 1 + (trial * 5) % 7, inner = 1 + trial % 3;
    const Matrix m = random_matrix(rng, r, inner, trial % 2 ? 4 : 1) * random_matrix(rng, inner, c, 1);
    const Subspace k = kernel(m);
    EXPECT_EQ(k.dim() + rank(m), c);
    EXPECT_EQ(rank(m), rank(m.transpose()));
    EXPECT_NO_THROW(check_rank_nullity(rank(m), k.dim(), c));
  }
  EXPECT_THROW(check_rank_nullity(2, 2, 5), std::logic_error);
}

TEST(Solve, Examples) {
  std::mt19937_64 rng(17);
  const Vector b = random_vector(rng, 4, 3);
  EXPECT_EQ(*solve(Matrix::identity(4), b), b);
  EXPECT_FALSE(solve(Matrix(2, 2), Vector{Cyclotomic(1), Cyclotomic(0)}).has_value());
  EXPECT_THROW(solve(Matrix(2, 3), Vector(3)), std::invalid_argument);
}

TEST(Solve, ConsistentSingularSystems) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(rng, 4, 2, 3) * random_matrix(rng, 2, 5, 1);
    const Vector x0 = random_vector(rng, 5, 3);
    const Vector b = m.apply(x0);
    const auto y = solve(m, b);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(m.apply(*y), b);
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = random_matrix(rng, 4, 4, 5);
    const auto inv = inverse(m);
    if (!inv) continue;
    EXPECT_EQ(m * *inv, Matrix::identity(4));
    EXPECT_EQ(*inv * m, Matrix::identity(4));
  }
  EXPECT_FALSE(inverse(jordan_nilpotent(3)).has_value());
}

TEST(MinimalPolynomial, Examples) {
  EXPECT_EQ(minimal_polynomial(Matrix(3, 3)), poly({0, 1}));
  EXPECT_EQ(minimal_polynomial(Matrix::identity(3)), poly({-1, 1}));
  EXPECT_EQ(minimal_polynomial(jordan_nilpotent(2)), poly({0, 0, 1}));
  EXPECT_EQ(minimal_polynomial(diag({2, 2, 3})), poly({6, -5, 1}));
}

TEST(MinimalPolynomial, AnnihilatesRandomMatrices) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix m = random_matrix(rng, n, n, trial % 3 == 0 ? 3 : 1);
    if (trial % 4 == 0) m = m * jordan_nilpotent(n);
    const Polynomial p = minimal_polynomial(m);
    EXPECT_TRUE(evaluate(p, m).is_zero()) << p.to_string();
    EXPECT_EQ(p.leading(), Cyclotomic(1));
    EXPECT_LE(p.degree(), static_cast<int>(n));
  }
}

TEST(Eigensplit, Examples) {
  const Cyclotomic z3 = make_root_of_unity(3, 1);
  const EigenSplit s = eigensplit(diag({1, 1, z3}), {Cyclotomic(1), z3});
  ASSERT_EQ(s.spaces.size(), 2u);
  EXPECT_EQ(s.spaces[0].space.dim(), 2u);
  EXPECT_EQ(s.spaces[1].space.dim(), 1u);
  EXPECT_TRUE(s.complete);

  const EigenSplit j = eigensplit(jordan_nilpotent(2), {Cyclotomic(0)});
  ASSERT_EQ(j.spaces.size(), 1u);
  EXPECT_EQ(j.spaces[0].space.dim(), 1u);
  EXPECT_FALSE(j.complete);
}

TEST(Diagonalizable, Examples) {
  EXPECT_TRUE(is_diagonalizable(Matrix::identity(3)));
  EXPECT_FALSE(is_diagonalizable(jordan_nilpotent(2)));
  // rotation by 2 pi / 3 is diagonalizable over the closure though not over Q
  const Matrix rot = Matrix::from_rows(2, {{Cyclotomic(0), Cyclotomic(-1)}, {Cyclotomic(1), Cyclotomic(-1)}});
  EXPECT_TRUE(is_diagonalizable(rot));
  EXPECT_FALSE(eigensplit(rot, {Cyclotomic(1)}).complete);
  const Cyclotomic z3 = make_root_of_unity(3, 1);
  EXPECT_TRUE(eigensplit(rot, {z3, z3.pow(2)}).complete);
}

TEST(Eigensplit, CompleteIffDiagonalizableWithCandidateRoots) {
  std::mt19937_64 rng(43);
  const Cyclotomic z3 = make_root_of_unity(3, 1);
  const std::vector<Cyclotomic> pool{Cyclotomic(0), Cyclotomic(1), z3};
  for (int trial = 0; trial < 10; ++trial) {
    Matrix p = random_matrix(rng, 3, 3);
    auto p_inv = inverse(p);
    if (!p_inv) continue;
    const Matrix d = trial % 2 ? diag({1, z3, 0}) : diag({1, 1, 0}) + jordan_nilpotent(3);
    const Matrix m = p * d * *p_inv;
    EXPECT_EQ(eigensplit(m, pool).complete, is_diagonalizable(m));
  }
}

TEST(Subspace, MembershipAndCoordinates) {
  const Vector a{Cyclotomic(1), Cyclotomic(2), Cyclotomic(0)};
  const Vector b{Cyclotomic(0), Cyclotomic(1), Cyclotomic(1)};
  const Subspace s = Subspace::span(3, {a, b, a + b});
  EXPECT_EQ(s.dim(), 2u);
  const Vector c = Cyclotomic(3) * a - b;
  EXPECT_TRUE(s.contains(c));
  EXPECT_FALSE(s.contains(Vector{Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)}));
  const Vector coords = s.coordinates(c);
  Vector rebuilt(3);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(rebuilt, coords[i], s.basis()[i]);
  EXPECT_EQ(rebuilt, c);
  EXPECT_EQ(s, Subspace::span(3, {b, a}));
}

TEST(Json, MatrixRoundTrip) {
  std::mt19937_64 rng(47);
  const Matrix m = random_matrix(rng, 3, 2, 4);
  const json j = to_json(m);
  EXPECT_EQ(matrix_from_json(j["entries"], 3, 2), m);
  EXPECT_THROW(matrix_from_json(j["entries"], 2, 2), std::invalid_argument);
}

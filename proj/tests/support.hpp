#pragma once

#include <random>

#include "contra/contra.hpp"

namespace testing_support {

using contra::Cyclotomic;
using contra::Matrix;
using contra::Rational;
using contra::Vector;

/// Small-height element of Q(zeta_order).
inline Cyclotomic random_scalar(std::mt19937_64& rng, int order, int height = 4) {
  std::uniform_int_distribution<int> num(-height, height), den(1, 3);
  std::vector<Rational> coeffs;
  for (int k = 0; k < order; ++k) coeffs.emplace_back(num(rng), den(rng));
  for (auto& c : coeffs) c.canonicalize();
  return Cyclotomic::from_power_coefficients(order, coeffs);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int order = 1) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, order, 3);
  return m;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, int order = 1) {
  Vector v(n);
  for (auto& x : v) x = random_scalar(rng, order, 3);
  return v;
}

}  // namespace testing_support

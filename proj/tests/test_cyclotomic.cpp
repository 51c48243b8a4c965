#include <gtest/gtest.h>

#include "support.hpp"

using namespace contra;
using testing_support::random_scalar;

TEST(Cyclotomic, RootsOfUnity) {
  EXPECT_EQ(make_root_of_unity(1, 0), Cyclotomic(1));
  EXPECT_EQ(make_root_of_unity(2, 1), Cyclotomic(-1));
  EXPECT_EQ(make_root_of_unity(3, 1).pow(3), Cyclotomic(1));
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12}) {
    const Cyclotomic z = make_root_of_unity(n, 1);
    EXPECT_EQ(z.pow(n), Cyclotomic(1)) << n;
    EXPECT_EQ(root_order(z), n) << n;
  }
  EXPECT_EQ(root_order(make_root_of_unity(12, 8)), 3);
  EXPECT_EQ(root_order(make_root_of_unity(9, 3)), 3);
}

TEST(Cyclotomic, CyclotomicPolynomialVanishes) {
  // Phi_5(z) = 1 + z + z^2 + z^3 + z^4 and Phi_12(z) = 1 - z^2 + z^4
  const Cyclotomic z5 = make_root_of_unity(5, 1);
  EXPECT_TRUE((Cyclotomic(1) + z5 + z5.pow(2) + z5.pow(3) + z5.pow(4)).is_zero());
  const Cyclotomic z12 = make_root_of_unity(12, 1);
  EXPECT_TRUE((Cyclotomic(1) - z12.pow(2) + z12.pow(4)).is_zero());
  EXPECT_EQ(z12.coefficients().size(), 4u);
}

TEST(Cyclotomic, FieldExamples) {
  const Cyclotomic z3 = make_root_of_unity(3, 1);
  EXPECT_EQ(z3.inverse(), z3.pow(2));
  EXPECT_TRUE(((Cyclotomic(1) + z3) + z3.pow(2)).is_zero());
  EXPECT_EQ(Cyclotomic(Rational(1, 2)) * Cyclotomic(2), Cyclotomic(1));
  EXPECT_THROW(Cyclotomic().inverse(), DomainError);
  EXPECT_THROW(Cyclotomic(1) / Cyclotomic(0), DomainError);
}

TEST(Cyclotomic, MixedOrdersEmbedInLcm) {
  const Cyclotomic i = make_root_of_unity(4, 1);
  const Cyclotomic w = make_root_of_unity(3, 1);
  const Cyclotomic prod = i * w;
  EXPECT_EQ(prod.order(), 12);
  EXPECT_EQ(prod, make_root_of_unity(12, 3 + 4));
  EXPECT_EQ(make_root_of_unity(6, 2), w);
  EXPECT_EQ(make_root_of_unity(6, 3), Cyclotomic(-1));
}

TEST(Cyclotomic, InverseProperty) {
  std::mt19937_64 rng(7);
  for (int order : {1, 2, 3, 4, 5, 6, 8, 9}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Cyclotomic x = random_scalar(rng, order);
      if (x.is_zero()) continue;
      EXPECT_EQ(x.inverse() * x, Cyclotomic(1)) << x;
      EXPECT_EQ(x / x, Cyclotomic(1));
    }
  }
}

TEST(Cyclotomic, RingAxiomsOnRandomScalars) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = trial % 2 == 0 ? 5 : 12;
    const Cyclotomic a = random_scalar(rng, order), b = random_scalar(rng, order), c = random_scalar(rng, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Cyclotomic, QIntegers) {
  const Cyclotomic z3 = make_root_of_unity(3, 1);
  EXPECT_TRUE(q_integer(0, z3).is_zero());
  EXPECT_TRUE(q_integer(2, Cyclotomic(-1)).is_zero());
  EXPECT_TRUE(q_integer(3, z3).is_zero());
  for (unsigned n = 0; n <= 20; ++n) EXPECT_EQ(q_integer(n, Cyclotomic(1)), Cyclotomic(static_cast<long>(n)));
}

TEST(Cyclotomic, QFactorials) {
  const Cyclotomic z3 = make_root_of_unity(3, 1);
  EXPECT_EQ(q_factorial(0, z3), Cyclotomic(1));
  EXPECT_EQ(q_factorial(1, Cyclotomic(-1)), Cyclotomic(1));
  EXPECT_EQ(q_factorial(2, z3.inverse()), Cyclotomic(1) + z3.inverse());
  for (int p : {2, 3, 5}) {
    const Cyclotomic z = make_root_of_unity(p, 1);
    EXPECT_TRUE(q_factorial(static_cast<unsigned>(p), z).is_zero()) << p;
    EXPECT_FALSE(q_factorial(static_cast<unsigned>(p - 1), z).is_zero()) << p;
  }
}

TEST(Cyclotomic, JsonRoundTrip) {
  std::mt19937_64 rng(3);
  for (int order : {1, 3, 4, 7}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Cyclotomic x = random_scalar(rng, order);
      const json j = to_json(x);
      EXPECT_EQ(cyclotomic_from_json(json::parse(j.dump())), x);
    }
  }
  EXPECT_EQ(cyclotomic_from_json(json(3)), Cyclotomic(3));
  EXPECT_EQ(cyclotomic_from_json(json("-1/2")), Cyclotomic(Rational(-1, 2)));
  EXPECT_THROW(cyclotomic_from_json(json{{"order", 3}}), std::invalid_argument);
  const json zero_den{{"order", 1}, {"coeffs", json::array({json::array({"1", "0"})})}};
  EXPECT_THROW(cyclotomic_from_json(zero_den), std::invalid_argument);
  EXPECT_THROW(cyclotomic_from_json(json("1/0")), std::invalid_argument);
  EXPECT_THROW(cyclotomic_from_json(json("one")), std::invalid_argument);
}

TEST(Cyclotomic, Printing) {
  EXPECT_EQ(Cyclotomic(-3).to_string(), "-3");
  EXPECT_EQ(make_root_of_unity(3, 2).to_string(), "-1 - z3");
}

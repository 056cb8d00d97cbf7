#include <gtest/gtest.h>

#include "lrc/commutor.hpp"
#include "lrc/enumerate.hpp"
#include "lrc/schur.hpp"

using namespace lrc;

namespace {

// Sum of c * s_lambda in n variables.
Polynomial expand(const SchurExpansion& e, int n) {
  Polynomial p(n);
  for (const auto& [lambda, c] : e) p.add_scaled(schur_polynomial(lambda, n), c);
  return p;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  Polynomial x(2), y(2);
  x.add_term({1, 0}, 1);
  y.add_term({0, 1}, 1);
  Polynomial s = x;
  s.add_scaled(y, 1);
  const Polynomial sq = s * s;
  EXPECT_EQ(sq.coefficient({1, 1}), 2);
  EXPECT_EQ(sq.coefficient({2, 0}), 1);
  EXPECT_EQ(sq.coefficient_sum(), 4);
  Polynomial z = x;
  z.add_scaled(x, -1);
  EXPECT_TRUE(z.terms().empty());
}

TEST(SchurPolynomial, Examples) {
  Polynomial s1 = schur_polynomial(Partition{1}, 2);
  EXPECT_EQ(s1.terms().size(), 2u);
  EXPECT_EQ(s1.coefficient({1, 0}), 1);
  EXPECT_EQ(s1.coefficient({0, 1}), 1);
  Polynomial s11 = schur_polynomial(Partition({1, 1}), 2);
  EXPECT_EQ(s11.terms().size(), 1u);
  EXPECT_EQ(s11.coefficient({1, 1}), 1);
  // Eight SSYT of shape (2,1) over [3], seven distinct monomials.
  Polynomial s21 = schur_polynomial(Partition({2, 1}), 3);
  EXPECT_EQ(s21.terms().size(), 7u);
  EXPECT_EQ(s21.coefficient({1, 1, 1}), 2);
  EXPECT_EQ(s21.coefficient_sum(), 8);
  EXPECT_EQ(schur_polynomial(Partition({1, 1, 1}), 2).terms().size(), 0u);
}

TEST(SchurPolynomial, Symmetric) {
  const Polynomial s = schur_polynomial(Partition({3, 1}), 3);
  for (const auto& [e, c] : s.terms()) {
    std::vector<int> swapped = e;
    std::swap(swapped[0], swapped[2]);
    EXPECT_EQ(s.coefficient(swapped), c);
  }
}

TEST(LrCoefficient, Examples) {
  EXPECT_EQ(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})), 2);
  EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition{0}), 1);
  EXPECT_EQ(lr_coefficient(Partition({3}), Partition({2, 1}), Partition{0}), 0);
  EXPECT_EQ(lr_coefficient(Partition({2}), Partition({2, 1}), Partition({1})), 0);
}

TEST(LrCoefficient, SymmetricAndWitnessedByCommutor) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : subpartitions(lambda))
        for (const auto& nu : partitions_of(n - mu.size())) {
          const BigInt c = lr_coefficient(lambda, mu, nu);
          EXPECT_EQ(c, lr_coefficient(lambda, nu, mu));
          for (const auto& t : enumerate_ballot(SkewShape(lambda, mu.padded(lambda.declared_length())), nu)) {
            const GluedPair img = rho1_switching(GluedPair(t));
            EXPECT_EQ(img.skew().inner(), nu);
            EXPECT_EQ(Partition(content(img.skew()).counts), mu);
          }
        }
}

TEST(SchurProduct, Examples) {
  const SchurExpansion e = schur_product(Partition{1}, Partition{1}, 2);
  EXPECT_EQ(e, (SchurExpansion{{Partition{2}, 1}, {Partition({1, 1}), 1}}));
  EXPECT_EQ(to_string(e), "s(2) + s(1,1)");
  EXPECT_EQ(schur_product(Partition{0}, Partition({3, 1}), 2), (SchurExpansion{{Partition({3, 1}), 1}}));
  EXPECT_EQ(schur_product(Partition{1}, Partition{1}, 1), (SchurExpansion{{Partition{2}, 1}}));
  EXPECT_THROW(schur_product(Partition({1, 1}), Partition{1}, 1), Error);
}

TEST(SchurProduct, AgreesWithPolynomialProduct) {
  const Partition a{2, 1};
  const SchurExpansion e = schur_product(a, a, 4);
  EXPECT_EQ(e.at(Partition({3, 2, 1})), 2);
  EXPECT_EQ(expand(e, 4), schur_polynomial(a, 4) * schur_polynomial(a, 4));
  // Evaluated at x = (1,1,1,1).
  BigInt total = 0;
  for (const auto& [lambda, c] : e) total += c * schur_polynomial(lambda, 4).coefficient_sum();
  EXPECT_EQ(total, schur_polynomial(a, 4).coefficient_sum() * schur_polynomial(a, 4).coefficient_sum());
}

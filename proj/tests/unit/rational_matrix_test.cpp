#include "stirling/rational_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

namespace stirling {
namespace {

// Independent oracle: cofactor expansion along the first row.
Rational det_cofactor(const RationalMatrix& m) {
  const std::size_t n = m.order();
  if (n == 1) return m.at(0, 0);
  Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    RationalMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const Rational term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t order) {
  RationalMatrix m(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      const long num = static_cast<long>(rng() % 11) - 5;
      const long den = static_cast<long>(rng() % 6) + 1;
      m.at(i, j) = make_rational(num, den);
    }
  return m;
}

TEST(DetTest, OrderOneIsEntry) {
  RationalMatrix m(1);
  m.at(0, 0) = 1;
  EXPECT_EQ(det_exact(m), 1);
  m.at(0, 0) = make_rational(-3, 7);
  EXPECT_EQ(det_exact(m), make_rational(-3, 7));
}

TEST(DetTest, HandExpandedTwoByTwo) {
  RationalMatrix m(2);
  m.at(0, 0) = 1;
  m.at(0, 1) = make_rational(1, 2);
  m.at(1, 0) = make_rational(1, 2);
  m.at(1, 1) = make_rational(1, 3);
  // 1*(1/3) - (1/2)*(1/2) = 1/12
  EXPECT_EQ(det_exact(m), make_rational(1, 12));
}

TEST(DetTest, EqualRowsAreSingular) {
  std::mt19937_64 rng(11);
  for (std::size_t order = 2; order <= 5; ++order) {
    RationalMatrix m = random_matrix(rng, order);
    for (std::size_t j = 0; j < order; ++j) m.at(order - 1, j) = m.at(0, j);
    EXPECT_EQ(det_exact(m), 0);
  }
}

TEST(DetTest, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(2024);
  for (std::size_t order = 1; order <= 5; ++order)
    for (int trial = 0; trial < 40; ++trial) {
      const RationalMatrix m = random_matrix(rng, order);
      EXPECT_EQ(det_exact(m), det_cofactor(m)) << "order " << order;
    }
}

TEST(DetTest, SignDiagonalConjugationInvariance) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 2 + rng() % 4;
    const RationalMatrix m = random_matrix(rng, order);
    std::vector<int> signs(order);
    for (auto& s : signs) s = (rng() % 2 == 0) ? 1 : -1;
    RationalMatrix conjugated(order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        conjugated.at(i, j) = Rational(signs[i] * signs[j]) * m.at(i, j);
    EXPECT_EQ(det_exact(conjugated), det_exact(m));
  }
}

TEST(DetTest, ZeroPivotNeedsRowSwap) {
  RationalMatrix m(3);
  // Leading entry zero so elimination must pivot.
  m.at(0, 0) = 0; m.at(0, 1) = 1; m.at(0, 2) = 2;
  m.at(1, 0) = 1; m.at(1, 1) = 0; m.at(1, 2) = 1;
  m.at(2, 0) = 2; m.at(2, 1) = 3; m.at(2, 2) = 0;
  EXPECT_EQ(det_exact(m), det_cofactor(m));
}

TEST(MatrixTest, Validation) {
  EXPECT_THROW(RationalMatrix(0), std::invalid_argument);
  RationalMatrix m(2);
  EXPECT_THROW(m.at(2, 0), std::out_of_range);
}

}  // namespace
}  // namespace stirling

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stirling/bigint.hpp"

namespace stirling {

// Square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t order)
      : order_(order), entries_(order * order) {
    if (order == 0) throw std::invalid_argument("RationalMatrix: order 0");
  }

  std::size_t order() const { return order_; }

  Rational& at(std::size_t i, std::size_t j) {
    check(i, j);
    return entries_[i * order_ + j];
  }
  const Rational& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return entries_[i * order_ + j];
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= order_ || j >= order_)
      throw std::out_of_range("RationalMatrix: index out of range");
  }

  std::size_t order_;
  std::vector<Rational> entries_;
};

// Exact determinant. Denominators are cleared row by row, the integer
// matrix is reduced by Bareiss fraction-free elimination (every interior
// division is exact, so intermediate growth stays polynomial), and the
// row factors are divided back out at the end.
inline Rational det_exact(const RationalMatrix& m) {
  const std::size_t n = m.order();
  if (n == 1) return m.at(0, 0);

  std::vector<std::vector<BigInt>> z(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      row_lcm = lcm(row_lcm, denominator(m.at(i, j)));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = m.at(i, j);
      z[i][j] = numerator(e) * (row_lcm / denominator(e));
    }
    scale *= row_lcm;
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (z[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && z[pivot][k] == 0) ++pivot;
      if (pivot == n) return Rational(0);
      std::swap(z[k], z[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        z[i][j] = (z[k][k] * z[i][j] - z[i][k] * z[k][j]) / prev;
      }
      z[i][k] = 0;
    }
    prev = z[k][k];
  }

  BigInt det = z[n - 1][n - 1];
  if (sign < 0) det = -det;
  return make_rational(det, scale);
}

}  // namespace stirling

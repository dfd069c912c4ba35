#pragma once

#include <stdexcept>
#include <vector>

#include "stirling/bigint.hpp"

namespace stirling {

// Truncated formal power series with exact rational coefficients.
// Every operation truncates at the fixed order; nothing is rounded.
class FormalSeries {
 public:
  explicit FormalSeries(int order) : coeff_(order + 1) {
    if (order < 0) throw std::invalid_argument("FormalSeries: order < 0");
  }

  int order() const { return static_cast<int>(coeff_.size()) - 1; }

  Rational& operator[](int j) { return coeff_.at(j); }
  const Rational& operator[](int j) const { return coeff_.at(j); }

  static FormalSeries one(int order) {
    FormalSeries s(order);
    s[0] = 1;
    return s;
  }

  // e^x - 1 = sum_{j>=1} x^j / j!
  static FormalSeries exp_minus_one(int order) {
    FormalSeries s(order);
    BigInt fact = 1;
    for (int j = 1; j <= order; ++j) {
      fact *= j;
      s[j] = make_rational(1, fact);
    }
    return s;
  }

  // ln(1+x) = sum_{j>=1} (-1)^{j-1} x^j / j
  static FormalSeries log_one_plus(int order) {
    FormalSeries s(order);
    for (int j = 1; j <= order; ++j)
      s[j] = make_rational(j % 2 == 1 ? 1 : -1, j);
    return s;
  }

  // (e^x - 1)/x = sum_{j>=0} x^j / (j+1)!
  static FormalSeries exp_minus_one_over_x(int order) {
    FormalSeries s(order);
    BigInt fact = 1;
    for (int j = 0; j <= order; ++j) {
      fact *= j + 1;
      s[j] = make_rational(1, fact);
    }
    return s;
  }

  FormalSeries mul(const FormalSeries& other) const {
    if (other.order() != order())
      throw std::invalid_argument("FormalSeries::mul: order mismatch");
    FormalSeries out(order());
    for (int i = 0; i <= order(); ++i) {
      if (coeff_[i] == 0) continue;
      for (int j = 0; i + j <= order(); ++j) {
        if (other.coeff_[j] == 0) continue;
        out.coeff_[i + j] += coeff_[i] * other.coeff_[j];
      }
    }
    return out;
  }

  FormalSeries pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("FormalSeries::pow: exponent < 0");
    FormalSeries result = one(order());
    FormalSeries base = *this;
    while (exponent != 0) {
      if (exponent & 1) result = result.mul(base);
      if (exponent >>= 1) base = base.mul(base);
    }
    return result;
  }

  FormalSeries scaled(const Rational& factor) const {
    FormalSeries out(order());
    for (int j = 0; j <= order(); ++j) out.coeff_[j] = coeff_[j] * factor;
    return out;
  }

  bool operator==(const FormalSeries& other) const = default;

 private:
  std::vector<Rational> coeff_;
};

}  // namespace stirling

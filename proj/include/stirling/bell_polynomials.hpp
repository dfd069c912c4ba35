#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stirling/bigint.hpp"
#include "stirling/binomial.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/formal_series.hpp"
#include "stirling/stirling_table.hpp"

namespace stirling {

inline constexpr int kMaxBellN = 25;

// Partial Bell polynomial B_{n,k}(x_1,...,x_{n-k+1}), evaluated directly:
//
//   sum over multiplicity vectors (l_i) with sum i*l_i = n, sum l_i = k of
//   n! / prod(l_i!) * prod (x_i / i!)^{l_i},
//
// enumerating integer partitions of n into exactly k parts.
inline Rational bell_partial(int n, int k, const std::vector<Rational>& args) {
  if (n < 0 || k < 0 || k > n)
    throw std::domain_error("bell_partial: need 0 <= k <= n");
  if (n > kMaxBellN)
    throw std::out_of_range("bell_partial: n = " + std::to_string(n) +
                            " beyond enumeration bound " + std::to_string(kMaxBellN));
  if (args.size() != static_cast<std::size_t>(n - k + 1))
    throw std::invalid_argument("bell_partial: expected " +
                                std::to_string(n - k + 1) + " arguments, got " +
                                std::to_string(args.size()));
  const BigInt n_fact = factorial(n);
  Rational sum = 0;
  for_each_partition_multiplicity(n, k, [&](const std::vector<int>& mult) {
    Rational term = Rational(n_fact);
    for (int i = 1; i <= n; ++i) {
      const int li = mult[i];
      if (li == 0) continue;
      term *= rpow(args[i - 1] / Rational(factorial(i)), li);
      term /= Rational(factorial(li));
    }
    sum += term;
  });
  return sum;
}

// The argument list (1/2, 1/3, ..., 1/(n-k+2)) at which the special-value
// identity holds.
inline std::vector<Rational> bell_reciprocal_args(int n, int k) {
  std::vector<Rational> args;
  args.reserve(n - k + 1);
  for (int i = 1; i <= n - k + 1; ++i) args.push_back(make_rational(1, i + 1));
  return args;
}

// Closed form for B_{n,k}(1/2, 1/3, ..., 1/(n-k+2)):
//
//   n!/(n+k)! sum_{i=0}^{k} (-1)^{k-i} C(n+k,k-i) S(n+i,i).
inline Rational bell_special_rhs(const StirlingTable& table, int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("bell_special_rhs: negative input");
  if (table.kind() != Kind::second)
    throw std::invalid_argument("bell_special_rhs: second-kind table required");
  BigInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    BigInt term = binom(n + k, k - i) * table.value(n + i, i);
    if ((k - i) % 2 != 0) term = -term;
    sum += term;
  }
  return Rational(factorial(n)) * Rational(sum) / Rational(factorial(n + k));
}

// Truncated series of H_k(x) = ((e^x - 1)/x)^k.
inline FormalSeries hk_series(int k, int order) {
  if (k < 1) throw std::domain_error("hk_series: need k >= 1");
  return FormalSeries::exp_minus_one_over_x(order).pow(k);
}

// As hk_series, with every coefficient checked against the triangle:
// [x^m] H_k = S(m+k,k) / (C(m+k,k) * m!).
inline FormalSeries hk_series_checked(int k, int order, const StirlingTable& table) {
  const FormalSeries series = hk_series(k, order);
  BigInt m_fact = 1;
  for (int m = 0; m <= order; ++m) {
    if (m > 0) m_fact *= m;
    const Rational expected =
        Rational(table.value(m + k, k)) / Rational(binom(m + k, k) * m_fact);
    if (series[m] != expected)
      throw consistency_error("hk_series(" + std::to_string(k) + "): coefficient of x^" +
                              std::to_string(m) + " is " + dec(series[m]) +
                              ", table gives " + dec(expected));
  }
  return series;
}

// Both routes to the m-th derivative of H_k at 0: the chain-rule expansion
// summed over Bell polynomials at the reciprocal arguments, against m!
// times the series coefficient. Terms with l > k vanish through the
// falling factorial, so one form covers m <= k and m > k alike.
struct FaaDiBrunoCheck {
  int k = 0;
  int m = 0;
  Rational bell_side;
  Rational series_side;
  bool equal = false;
};

inline FaaDiBrunoCheck faa_di_bruno_check(int k, int m) {
  if (k < 1) throw std::domain_error("faa_di_bruno_check: need k >= 1");
  if (m < 1 || m > kMaxBellN)
    throw std::out_of_range("faa_di_bruno_check: need 1 <= m <= " +
                            std::to_string(kMaxBellN));
  FaaDiBrunoCheck check;
  check.k = k;
  check.m = m;
  for (int l = 1; l <= m; ++l) {
    const BigInt coeff = falling_factorial(k, l);
    if (coeff == 0) continue;
    check.bell_side += Rational(coeff) * bell_partial(m, l, bell_reciprocal_args(m, l));
  }
  check.series_side = hk_series(k, m)[m] * Rational(factorial(m));
  check.equal = check.bell_side == check.series_side;
  return check;
}

}  // namespace stirling
